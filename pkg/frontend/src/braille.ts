/*
 * Braille strip: each value becomes one of four density bands over the
 * layer's range, rendered with braille cells of rising fill. A flat
 * layer (range zero) sits in the second band, matching the midpoint
 * convention sonification uses for constant values.
 */

import type { HeatmapGrid, Layer } from "./schema";
import { layerValues } from "./sonify";

export const BAND_CHARS = ["⣀", "⣤", "⣶", "⣿"] as const; // ⣀ ⣤ ⣶ ⣿

export function bandIndex(value: number, min: number, max: number): number {
  const range = max - min;
  if (!(range > 0)) {
    return 1;
  }
  const band = Math.floor((3 * (value - min)) / range);
  return Math.max(0, Math.min(band, 3));
}

/** One braille cell per value, banded over the values' own range. */
export function brailleLine(values: number[]): string {
  if (values.length === 0) {
    return "";
  }
  const min = Math.min(...values);
  const max = Math.max(...values);
  return values.map((v) => BAND_CHARS[bandIndex(v, min, max)]).join("");
}

/**
 * The whole layer as braille. A heatmap renders one run per grid row,
 * space-separated, banded over the full grid so rows are comparable;
 * every other layer is a single run over its values.
 */
export function brailleFor(layer: Layer): string {
  if (layer.type === "heatmap") {
    const grid = layer.data[0] as HeatmapGrid;
    const flat = grid.values.flat();
    if (flat.length === 0) {
      return "";
    }
    const min = Math.min(...flat);
    const max = Math.max(...flat);
    return grid.values
      .map((row) => row.map((v) => BAND_CHARS[bandIndex(v, min, max)]).join(""))
      .join(" ");
  }
  return brailleLine(layerValues(layer));
}
