/*
 * DOM wiring: finds instrumented SVGs, parses their payloads, and
 * binds the keyboard exploration loop.
 *
 *   Left / Right     previous / next data point (clamped at the ends)
 *   Up / Down        switch layer within the subplot
 *   PageUp / PageDown  switch subplot
 *   T, S, B          toggle text, sonification, braille
 *
 * Text, sonification, and braille toggle independently. Navigation
 * feedback (boundary notes, layer and subplot labels, toggle
 * confirmations) is always spoken; point descriptions only while text
 * is on. A chart whose payload is missing or malformed stays a plain
 * image apart from one diagnostic alert.
 */

import { brailleFor } from "./braille";
import { applyHighlight } from "./highlight";
import type { ChartDocument } from "./schema";
import { parseDocument, PayloadError } from "./schema";
import { frequencyFor, layerValues, playTone, valueAt } from "./sonify";
import type { ToneContext } from "./sonify";
import type { ExplorerState, Modality, StepResult } from "./state";
import {
  currentLayer,
  currentSubplot,
  initialState,
  stepLayer,
  stepPoint,
  stepSubplot,
  toggle,
} from "./state";
import {
  chartLabel,
  describePoint,
  FOCUS_MESSAGE,
  layerLabel,
  subplotLabel,
  toggleMessage,
} from "./text";

interface Chart {
  svg: Element;
  doc: ChartDocument;
  state: ExplorerState;
  live: HTMLElement;
  brailleStrip: HTMLElement;
  audio: ToneContext | null;
}

/** Initialize every instrumented SVG under root; returns how many. */
export function boot(root: Document): number {
  let count = 0;
  for (const svg of Array.from(root.querySelectorAll("svg[maidr-data]"))) {
    if (initChart(svg) !== null) {
      count += 1;
    }
  }
  return count;
}

/** Run boot now, or at DOMContentLoaded while the page is still loading. */
export function bootWhenReady(root: Document = document): void {
  if (root.readyState === "loading") {
    root.addEventListener("DOMContentLoaded", () => boot(root));
  } else {
    boot(root);
  }
}

export function initChart(svg: Element): Chart | null {
  let doc: ChartDocument;
  try {
    doc = parseDocument(svg.getAttribute("maidr-data"));
  } catch (error) {
    const message =
      error instanceof PayloadError ? error.message : "accessible data payload failed";
    announceFailure(svg, message);
    return null;
  }
  const chart: Chart = {
    svg,
    doc,
    state: initialState(),
    live: makeLiveRegion(svg),
    brailleStrip: makeBrailleStrip(svg),
    audio: null,
  };
  svg.setAttribute("tabindex", "0");
  svg.setAttribute("role", "img");
  svg.setAttribute("aria-label", chartLabel(doc));
  svg.addEventListener("keydown", (event) => handleKey(chart, event as KeyboardEvent));
  svg.addEventListener("focus", () => speak(chart.live, FOCUS_MESSAGE));
  return chart;
}

function makeLiveRegion(svg: Element): HTMLElement {
  const owner = svg.ownerDocument as Document;
  const region = owner.createElement("div");
  region.setAttribute("aria-live", "assertive");
  region.setAttribute("role", "status");
  region.style.position = "absolute";
  region.style.left = "-10000px";
  region.style.width = "1px";
  region.style.height = "1px";
  region.style.overflow = "hidden";
  svg.parentNode?.insertBefore(region, svg.nextSibling);
  return region;
}

function makeBrailleStrip(svg: Element): HTMLElement {
  const owner = svg.ownerDocument as Document;
  const strip = owner.createElement("pre");
  strip.className = "a11yplot-braille";
  strip.hidden = true;
  svg.parentNode?.insertBefore(strip, svg.nextSibling);
  return strip;
}

function announceFailure(svg: Element, message: string): void {
  const owner = svg.ownerDocument as Document;
  const note = owner.createElement("p");
  note.setAttribute("role", "alert");
  note.textContent = message;
  svg.parentNode?.insertBefore(note, svg.nextSibling);
}

function speak(live: HTMLElement, text: string): void {
  // clearing first re-triggers assertive live regions on repeat text
  live.textContent = "";
  live.textContent = text;
}

const TOGGLE_KEYS: Record<string, Modality> = {
  t: "text",
  s: "sonification",
  b: "braille",
};

function handleKey(chart: Chart, event: KeyboardEvent): void {
  const key = event.key;
  let handled = true;
  if (key === "ArrowRight" || key === "ArrowLeft") {
    applyStep(chart, stepPoint(chart.doc, chart.state, key === "ArrowRight" ? 1 : -1), null);
  } else if (key === "ArrowUp" || key === "ArrowDown") {
    const result = stepLayer(chart.doc, chart.state, key === "ArrowUp" ? 1 : -1);
    applyStep(chart, result, result.changed ? layerPrefix(chart, result.state) : null);
  } else if (key === "PageDown" || key === "PageUp") {
    const result = stepSubplot(chart.doc, chart.state, key === "PageDown" ? 1 : -1);
    applyStep(chart, result, result.changed ? subplotPrefix(chart, result.state) : null);
  } else if (key.toLowerCase() in TOGGLE_KEYS) {
    applyToggle(chart, TOGGLE_KEYS[key.toLowerCase()]);
  } else {
    handled = false;
  }
  if (handled) {
    event.preventDefault();
    event.stopPropagation();
  }
}

function layerPrefix(chart: Chart, state: ExplorerState): string {
  const layers = currentSubplot(chart.doc, state).layers;
  return layerLabel(layers[state.layer], state.layer, layers.length);
}

function subplotPrefix(chart: Chart, state: ExplorerState): string {
  const subplot = currentSubplot(chart.doc, state);
  return subplotLabel(subplot, state.subplot, chart.doc.subplots.length);
}

function applyStep(chart: Chart, result: StepResult, prefix: string | null): void {
  if (!result.changed) {
    if (result.clampNote !== null) {
      speak(chart.live, result.clampNote);
    }
    return;
  }
  chart.state = result.state;
  emit(chart, prefix);
}

function applyToggle(chart: Chart, modality: Modality): void {
  chart.state = toggle(chart.state, modality);
  speak(chart.live, toggleMessage(modality, chart.state[modality]));
  if (modality === "braille") {
    updateBraille(chart);
  }
}

/** Reflect the new cursor position in every active modality. */
function emit(chart: Chart, prefix: string | null): void {
  const layer = currentLayer(chart.doc, chart.state);
  applyHighlight(chart.svg, layer, chart.state.point);
  const description =
    chart.state.text && chart.state.point >= 0
      ? describePoint(layer, chart.state.point)
      : null;
  const parts = [prefix, description].filter((part): part is string => part !== null);
  if (parts.length > 0) {
    speak(chart.live, parts.join("; "));
  }
  if (chart.state.sonification) {
    sonifyPoint(chart, layer);
  }
  updateBraille(chart);
}

function sonifyPoint(chart: Chart, layer: ReturnType<typeof currentLayer>): void {
  const value = valueAt(layer, chart.state.point);
  if (value === null) {
    return;
  }
  const context = chart.audio ?? (chart.audio = makeAudioContext());
  if (context === null) {
    return;
  }
  playTone(context, frequencyFor(layerValues(layer), value));
}

function makeAudioContext(): ToneContext | null {
  const AudioContextCtor = (globalThis as { AudioContext?: new () => ToneContext })
    .AudioContext;
  return AudioContextCtor === undefined ? null : new AudioContextCtor();
}

function updateBraille(chart: Chart): void {
  if (!chart.state.braille) {
    chart.brailleStrip.hidden = true;
    chart.brailleStrip.textContent = "";
    return;
  }
  chart.brailleStrip.hidden = false;
  chart.brailleStrip.textContent = brailleFor(currentLayer(chart.doc, chart.state));
}
