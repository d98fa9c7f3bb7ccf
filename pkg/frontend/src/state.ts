/*
 * Exploration cursor and modality toggles.
 *
 * All transitions are pure: they take the document and the current
 * state and return a new state plus what happened, so the keyboard
 * layer stays a thin shell and every rule is unit-testable.
 *
 * The cursor starts at point -1, before the first data point; the
 * first horizontal move lands on point 0. Layer and subplot moves
 * clamp the finer indices instead of resetting them, so backtracking
 * returns to where the user left off.
 */

import type { ChartDocument, Layer, Subplot } from "./schema";

export interface ExplorerState {
  subplot: number;
  layer: number;
  point: number;
  text: boolean;
  sonification: boolean;
  braille: boolean;
}

export type Modality = "text" | "sonification" | "braille";

export interface StepResult {
  state: ExplorerState;
  /** False when the move clamped at a boundary and nothing changed. */
  changed: boolean;
  /** Boundary message to announce when changed is false. */
  clampNote: string | null;
}

export function initialState(): ExplorerState {
  return {
    subplot: 0,
    layer: 0,
    point: -1,
    text: true,
    sonification: false,
    braille: false,
  };
}

export function currentSubplot(doc: ChartDocument, state: ExplorerState): Subplot {
  return doc.subplots[state.subplot];
}

export function currentLayer(doc: ChartDocument, state: ExplorerState): Layer {
  return currentSubplot(doc, state).layers[state.layer];
}

function clampIndex(value: number, count: number): number {
  return Math.max(0, Math.min(value, count - 1));
}

const moved: (state: ExplorerState) => StepResult = (state) => ({
  state,
  changed: true,
  clampNote: null,
});

const clamped: (state: ExplorerState, note: string) => StepResult = (state, note) => ({
  state,
  changed: false,
  clampNote: note,
});

export function stepPoint(
  doc: ChartDocument,
  state: ExplorerState,
  delta: 1 | -1,
): StepResult {
  const count = currentLayer(doc, state).data.length;
  if (state.point === -1) {
    // either direction enters the data at its first point
    return moved({ ...state, point: 0 });
  }
  const next = state.point + delta;
  if (next < 0) {
    return clamped(state, "start of data");
  }
  if (next >= count) {
    return clamped(state, "end of data");
  }
  return moved({ ...state, point: next });
}

export function stepLayer(
  doc: ChartDocument,
  state: ExplorerState,
  delta: 1 | -1,
): StepResult {
  const layers = currentSubplot(doc, state).layers;
  const next = state.layer + delta;
  if (next < 0) {
    return clamped(state, "no layer below");
  }
  if (next >= layers.length) {
    return clamped(state, "no layer above");
  }
  const point = clampIndex(state.point, layers[next].data.length);
  return moved({ ...state, layer: next, point });
}

export function stepSubplot(
  doc: ChartDocument,
  state: ExplorerState,
  delta: 1 | -1,
): StepResult {
  const next = state.subplot + delta;
  if (next < 0) {
    return clamped(state, "no previous subplot");
  }
  if (next >= doc.subplots.length) {
    return clamped(state, "no next subplot");
  }
  const layers = doc.subplots[next].layers;
  const layer = clampIndex(state.layer, layers.length);
  const point = clampIndex(state.point, layers[layer].data.length);
  return moved({ ...state, subplot: next, layer, point });
}

export function toggle(state: ExplorerState, modality: Modality): ExplorerState {
  return { ...state, [modality]: !state[modality] };
}
