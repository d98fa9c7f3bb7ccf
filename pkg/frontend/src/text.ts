/*
 * Spoken descriptions for the text modality and for navigation
 * feedback. Numbers are rounded to four significant digits; full
 * precision stays available in the payload itself.
 */

import type {
  BarPoint,
  BoxStats,
  ChartDocument,
  HeatmapGrid,
  HistogramBin,
  Layer,
  SeriesPoint,
  StackSegment,
  Subplot,
} from "./schema";

export const FOCUS_MESSAGE = "chart active; use arrow keys to explore";

export function formatNumber(value: number): string {
  if (Number.isInteger(value)) {
    return String(value);
  }
  return String(Number(value.toPrecision(4)));
}

function formatX(value: string | number): string {
  return typeof value === "number" ? formatNumber(value) : value;
}

/** Description of the data point under the cursor. */
export function describePoint(layer: Layer, index: number): string {
  const xLabel = layer.axes.x_label || "x";
  const yLabel = layer.axes.y_label || "y";
  if (layer.type === "heatmap") {
    const grid = layer.data[index] as HeatmapGrid;
    const cols = grid.values.length ? grid.values[0].length : 0;
    return `grid of ${grid.values.length} rows by ${cols} columns`;
  }
  if (layer.type === "box_vertical" || layer.type === "box_horizontal") {
    return describeBox(layer, layer.data[index] as BoxStats, index);
  }
  if (layer.type === "histogram") {
    const bin = layer.data[index] as HistogramBin;
    return (
      `${xLabel} ${formatNumber(bin.xmin)} to ${formatNumber(bin.xmax)}, ` +
      `${yLabel} ${formatNumber(bin.y)}`
    );
  }
  const point = layer.data[index] as BarPoint & Partial<SeriesPoint & StackSegment>;
  const parts = [`${xLabel} ${formatX(point.x)}`, `${yLabel} ${formatNumber(point.y)}`];
  if (point.fill !== undefined) {
    parts.unshift(point.fill);
  }
  if (point.series_label !== undefined) {
    parts.unshift(point.series_label);
  }
  return parts.join(", ");
}

function describeBox(layer: Layer, box: BoxStats, index: number): string {
  const levels = layer.axes.x_levels;
  const label = levels && index < levels.length ? `${levels[index]}: ` : "";
  const summary =
    `low ${formatNumber(box.lower_extreme)}, ` +
    `first quartile ${formatNumber(box.q1)}, ` +
    `median ${formatNumber(box.median)}, ` +
    `third quartile ${formatNumber(box.q3)}, ` +
    `high ${formatNumber(box.upper_extreme)}`;
  const n = box.outliers.length;
  const outliers = n === 0 ? "" : n === 1 ? ", 1 outlier" : `, ${n} outliers`;
  return `${label}${summary}${outliers}`;
}

/** Announced when Up or Down lands on another layer. */
export function layerLabel(layer: Layer, index: number, count: number): string {
  return `layer ${index + 1} of ${count}: ${layer.type}`;
}

/** Announced when PageUp or PageDown lands on another subplot. */
export function subplotLabel(subplot: Subplot, index: number, count: number): string {
  const title = subplot.layers[0]?.axes.title;
  const suffix = title ? `: ${title}` : "";
  return `subplot ${index + 1} of ${count}${suffix}`;
}

/** Accessible name for the chart as a whole. */
export function chartLabel(doc: ChartDocument): string {
  for (const subplot of doc.subplots) {
    for (const layer of subplot.layers) {
      if (layer.axes.title) {
        return layer.axes.title;
      }
    }
  }
  return "accessible chart";
}

export function toggleMessage(modality: string, enabled: boolean): string {
  return `${modality} ${enabled ? "on" : "off"}`;
}
