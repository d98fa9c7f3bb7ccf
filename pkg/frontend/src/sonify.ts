/*
 * Sonification: the layer's value range maps linearly onto 220 to
 * 880 Hz. A constant layer has no range; every point then sounds the
 * 550 Hz midpoint. Playback takes any AudioContext-shaped object so
 * tests can observe tones without Web Audio.
 */

import type { BoxStats, HeatmapGrid, Layer } from "./schema";

export const FREQUENCY_MIN = 220;
export const FREQUENCY_MAX = 880;
export const TONE_GAIN = 0.1;
export const TONE_SECONDS = 0.18;

/**
 * The numeric values a layer's range is computed over: point values
 * for value-per-point layers, the median of each box, and the
 * row-major cells of a heatmap grid.
 */
export function layerValues(layer: Layer): number[] {
  if (layer.type === "heatmap") {
    const grid = layer.data[0] as HeatmapGrid;
    return grid.values.flat().filter(isUsable);
  }
  if (layer.type === "box_vertical" || layer.type === "box_horizontal") {
    return layer.data.map((box) => (box as BoxStats).median).filter(isUsable);
  }
  return layer.data.map((point) => (point as { y: number }).y).filter(isUsable);
}

/**
 * The value sounded for the point under the cursor, or null when the
 * point has no single value (a whole heatmap grid does not).
 */
export function valueAt(layer: Layer, index: number): number | null {
  if (index < 0 || index >= layer.data.length || layer.type === "heatmap") {
    return null;
  }
  const point = layer.data[index] as { y?: number; median?: number };
  const value = layer.type === "box_vertical" || layer.type === "box_horizontal"
    ? point.median
    : point.y;
  return isUsable(value) ? (value as number) : null;
}

function isUsable(value: unknown): value is number {
  return typeof value === "number" && Number.isFinite(value);
}

export function frequencyFor(values: number[], value: number): number {
  const min = Math.min(...values);
  const max = Math.max(...values);
  const unit = max > min ? (value - min) / (max - min) : 0.5;
  return FREQUENCY_MIN + unit * (FREQUENCY_MAX - FREQUENCY_MIN);
}

/* Just enough of the Web Audio surface for a short fixed-gain tone. */

export interface GainParamLike {
  value: number;
}

export interface OscillatorLike {
  frequency: GainParamLike;
  connect(target: unknown): unknown;
  start(): void;
  stop(when: number): void;
}

export interface GainLike {
  gain: GainParamLike;
  connect(target: unknown): unknown;
}

export interface ToneContext {
  createOscillator(): OscillatorLike;
  createGain(): GainLike;
  destination: unknown;
  currentTime: number;
}

export function playTone(context: ToneContext, frequency: number): void {
  const oscillator = context.createOscillator();
  const gain = context.createGain();
  oscillator.frequency.value = frequency;
  gain.gain.value = TONE_GAIN;
  oscillator.connect(gain);
  gain.connect(context.destination);
  oscillator.start();
  oscillator.stop(context.currentTime + TONE_SECONDS);
}
