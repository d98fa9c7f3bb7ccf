/*
 * Visual cursor: the element for the data point under the cursor gets
 * a highlight class, and never more than one element holds it. Element
 * lookup goes through the layer selector's maidr-id terms, indexed by
 * the layer's element semantics.
 */

import type { Layer } from "./schema";
import { elementIndexFor, selectorIds } from "./schema";

export const HIGHLIGHT_CLASS = "a11yplot-highlight";

export function ensureHighlightStyle(owner: Document): void {
  if (owner.getElementById(HIGHLIGHT_CLASS)) {
    return;
  }
  const style = owner.createElement("style");
  style.id = HIGHLIGHT_CLASS;
  style.textContent =
    `.${HIGHLIGHT_CLASS} { stroke: #d62728 !important; stroke-width: 2.5 !important; }`;
  owner.head.appendChild(style);
}

export function clearHighlight(svg: Element): void {
  for (const element of Array.from(svg.querySelectorAll(`.${HIGHLIGHT_CLASS}`))) {
    element.classList.remove(HIGHLIGHT_CLASS);
  }
}

/**
 * Move the highlight to the element representing pointIndex, clearing
 * any previous one. Returns the highlighted element, or null when the
 * cursor is before the data or the element is not in this SVG.
 */
export function applyHighlight(
  svg: Element,
  layer: Layer,
  pointIndex: number,
): Element | null {
  clearHighlight(svg);
  if (pointIndex < 0 || pointIndex >= layer.data.length) {
    return null;
  }
  if (svg.ownerDocument) {
    ensureHighlightStyle(svg.ownerDocument);
  }
  const ids = selectorIds(layer.selector);
  const id = ids[elementIndexFor(layer, pointIndex)];
  if (id === undefined) {
    return null;
  }
  const element = svg.querySelector(`[maidr-id="${id}"]`);
  if (element === null) {
    return null;
  }
  element.classList.add(HIGHLIGHT_CLASS);
  return element;
}
