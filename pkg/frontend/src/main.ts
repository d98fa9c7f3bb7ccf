// Bundle entry point: self-boot when loaded as a plain script.
import { bootWhenReady } from "./engine";

bootWhenReady();
