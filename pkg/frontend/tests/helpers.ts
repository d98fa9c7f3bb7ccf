/*
 * Shared test plumbing: real SVG fixtures rendered by the Python CLI
 * (see fixtures/README.md), mounted into jsdom, plus a tiny seeded RNG
 * for randomized walks.
 */

import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";
import { fileURLToPath } from "node:url";

import type { ChartDocument } from "../src/schema";
import { parseDocument } from "../src/schema";

const FIXTURE_DIR = resolve(dirname(fileURLToPath(import.meta.url)), "fixtures");

/** Corpus order used by the Python reports. */
export const FIXTURES = [
  "bar",
  "horizontal_box",
  "vertical_box",
  "line",
  "dodged",
  "multilayered",
  "multipanel",
  "scatter",
  "histogram",
  "stacked",
  "heatmap",
  "multiline",
  "multiline_wrapper",
] as const;

export type FixtureName = (typeof FIXTURES)[number];

export function fixtureText(name: FixtureName): string {
  return readFileSync(resolve(FIXTURE_DIR, `${name}.svg`), "utf-8");
}

/* Standalone exports open with an XML prolog and DOCTYPE; neither may
 * enter an HTML body, so embedding starts at the root element, exactly
 * as the Python HTML assembler does. */
export function svgElementText(svg: string): string {
  const start = svg.indexOf("<svg");
  return start >= 0 ? svg.slice(start) : svg;
}

/** Mount a fixture into the jsdom body and return its SVG root. */
export function mountFixture(name: FixtureName): SVGSVGElement {
  document.body.insertAdjacentHTML("beforeend", svgElementText(fixtureText(name)));
  const svgs = document.body.querySelectorAll("svg");
  return svgs[svgs.length - 1] as SVGSVGElement;
}

export function payloadOf(svg: Element): ChartDocument {
  return parseDocument(svg.getAttribute("maidr-data"));
}

export function resetDom(): void {
  document.body.innerHTML = "";
  document.head.innerHTML = "";
}

/** Deterministic 32-bit RNG (mulberry32); good enough for walks. */
export function seededRng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function pick<T>(rng: () => number, items: readonly T[]): T {
  return items[Math.floor(rng() * items.length)];
}
