/*
 * Payload contract for instrumented charts.
 *
 * An accessible SVG carries one JSON document in its maidr-data
 * attribute describing every layer of every subplot: plot type, axis
 * labels, extracted data points, and a selector naming the tagged SVG
 * elements. parseDocument re-checks the shape strictly enough that the
 * rest of the engine can navigate without defensive code; anything off
 * raises PayloadError and the chart is left as a plain image.
 */

export type PlotType =
  | "bar"
  | "stacked_bar"
  | "dodged_bar"
  | "histogram"
  | "line"
  | "multiline"
  | "box_horizontal"
  | "box_vertical"
  | "heatmap"
  | "scatter";

export const PLOT_TYPES: readonly PlotType[] = [
  "bar",
  "stacked_bar",
  "dodged_bar",
  "histogram",
  "line",
  "multiline",
  "box_horizontal",
  "box_vertical",
  "heatmap",
  "scatter",
];

export interface AxesInfo {
  x_label: string;
  y_label: string;
  title: string;
  x_levels?: string[];
}

export interface BarPoint {
  x: string | number;
  y: number;
}

export interface HistogramBin {
  x: number;
  y: number;
  xmin: number;
  xmax: number;
}

export interface SeriesPoint {
  x: number;
  y: number;
  series_label: string;
}

export interface StackSegment {
  x: string | number;
  fill: string;
  y: number;
}

export interface BoxStats {
  lower_extreme: number;
  q1: number;
  median: number;
  q3: number;
  upper_extreme: number;
  outliers: number[];
}

export interface HeatmapGrid {
  values: number[][];
  row_labels: string[];
  col_labels: string[];
}

export type DataPoint =
  | BarPoint
  | HistogramBin
  | SeriesPoint
  | StackSegment
  | BoxStats
  | HeatmapGrid;

export interface Layer {
  type: PlotType;
  axes: AxesInfo;
  data: DataPoint[];
  selector: string;
}

export interface Subplot {
  row: number;
  col: number;
  layers: Layer[];
}

export interface ChartDocument {
  id: string;
  subplots: Subplot[];
}

/** A maidr-data payload that cannot be used. The message is shown verbatim. */
export class PayloadError extends Error {}

const MISSING = "accessible data payload is missing";
const UNPARSEABLE = "accessible data payload could not be parsed";
const EMPTY = "accessible data payload is empty";

function malformed(path: string, detail: string): PayloadError {
  return new PayloadError(`accessible data payload is malformed: ${path} ${detail}`);
}

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function requireString(value: unknown, path: string): string {
  if (typeof value !== "string") {
    throw malformed(path, "must be a string");
  }
  return value;
}

function requireStringArray(value: unknown, path: string): string[] {
  if (!Array.isArray(value) || value.some((v) => typeof v !== "string")) {
    throw malformed(path, "must be an array of strings");
  }
  return value as string[];
}

/**
 * Parse and structurally validate a maidr-data payload.
 *
 * Throws PayloadError with a human-readable message for a missing
 * attribute, malformed JSON, an empty document, an unknown plot type,
 * or any field of the wrong shape.
 */
export function parseDocument(text: string | null): ChartDocument {
  if (text === null || text === "") {
    throw new PayloadError(MISSING);
  }
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch {
    throw new PayloadError(UNPARSEABLE);
  }
  if (!isRecord(doc)) {
    throw malformed("$", "must be an object");
  }
  const id = requireString(doc.id, "$.id");
  const subplotsDoc = doc.subplots;
  if (!Array.isArray(subplotsDoc) || subplotsDoc.length === 0) {
    throw new PayloadError(EMPTY);
  }
  const subplots = subplotsDoc.map((sub, i) => parseSubplot(sub, `$.subplots[${i}]`));
  return { id, subplots };
}

function parseSubplot(doc: unknown, path: string): Subplot {
  if (!isRecord(doc)) {
    throw malformed(path, "must be an object");
  }
  const { row, col } = doc;
  if (typeof row !== "number" || typeof col !== "number") {
    throw malformed(path, "needs numeric row and col");
  }
  if (!Array.isArray(doc.layers) || doc.layers.length === 0) {
    throw malformed(`${path}.layers`, "must be a non-empty array");
  }
  const layers = doc.layers.map((layer, j) => parseLayer(layer, `${path}.layers[${j}]`));
  return { row, col, layers };
}

function parseLayer(doc: unknown, path: string): Layer {
  if (!isRecord(doc)) {
    throw malformed(path, "must be an object");
  }
  const type = requireString(doc.type, `${path}.type`);
  if (!(PLOT_TYPES as readonly string[]).includes(type)) {
    throw malformed(`${path}.type`, `unknown plot type "${type}"`);
  }
  const axes = parseAxes(doc.axes, `${path}.axes`);
  const selector = requireString(doc.selector, `${path}.selector`);
  if (!Array.isArray(doc.data) || doc.data.length === 0) {
    throw malformed(`${path}.data`, "must be a non-empty array");
  }
  const data = doc.data.map((point, k) => {
    if (!isRecord(point)) {
      throw malformed(`${path}.data[${k}]`, "must be an object");
    }
    return point as unknown as DataPoint;
  });
  return { type: type as PlotType, axes, selector, data };
}

function parseAxes(doc: unknown, path: string): AxesInfo {
  if (!isRecord(doc)) {
    throw malformed(path, "must be an object");
  }
  const axes: AxesInfo = {
    x_label: requireString(doc.x_label, `${path}.x_label`),
    y_label: requireString(doc.y_label, `${path}.y_label`),
    title: requireString(doc.title, `${path}.title`),
  };
  if (doc.x_levels !== undefined && doc.x_levels !== null) {
    axes.x_levels = requireStringArray(doc.x_levels, `${path}.x_levels`);
  }
  return axes;
}

/**
 * What one tagged SVG element stands for in a layer of this type:
 * one data point, one series of a multi-series layer, or the whole
 * layer (vertex order equals point order).
 */
export type ElementSemantics = "point" | "series" | "layer";

export function elementSemantics(type: PlotType): ElementSemantics {
  if (type === "multiline") {
    return "series";
  }
  if (type === "line" || type === "scatter" || type === "heatmap") {
    return "layer";
  }
  return "point";
}

const SELECTOR_TERM = /\[maidr-id="([^"]+)"\]/g;

/** The element ids named by a layer selector, in order. */
export function selectorIds(selector: string): string[] {
  const ids: string[] = [];
  for (const match of selector.matchAll(SELECTOR_TERM)) {
    ids.push(match[1]);
  }
  return ids;
}

/** Distinct series labels of a multiline layer, in first-appearance order. */
export function seriesLabels(layer: Layer): string[] {
  const labels: string[] = [];
  for (const point of layer.data) {
    const label = (point as SeriesPoint).series_label;
    if (typeof label === "string" && !labels.includes(label)) {
      labels.push(label);
    }
  }
  return labels;
}

/**
 * Index into the layer's selector ids for the element representing the
 * data point at pointIndex.
 */
export function elementIndexFor(layer: Layer, pointIndex: number): number {
  const semantics = elementSemantics(layer.type);
  if (semantics === "layer") {
    return 0;
  }
  if (semantics === "series") {
    const label = (layer.data[pointIndex] as SeriesPoint).series_label;
    return seriesLabels(layer).indexOf(label);
  }
  return pointIndex;
}
