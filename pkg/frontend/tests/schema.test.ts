import { beforeEach, describe, expect, it } from "vitest";

import {
  elementIndexFor,
  elementSemantics,
  parseDocument,
  PayloadError,
  PLOT_TYPES,
  selectorIds,
  seriesLabels,
} from "../src/schema";
import { FIXTURES, mountFixture, payloadOf, resetDom } from "./helpers";

beforeEach(resetDom);

describe("parseDocument on real payloads", () => {
  it.each(FIXTURES)("accepts the %s fixture", (name) => {
    const doc = payloadOf(mountFixture(name));
    expect(doc.id).toMatch(/^maidr-\d+$/);
    expect(doc.subplots.length).toBeGreaterThan(0);
    for (const subplot of doc.subplots) {
      expect(subplot.layers.length).toBeGreaterThan(0);
      for (const layer of subplot.layers) {
        expect(PLOT_TYPES).toContain(layer.type);
        expect(layer.data.length).toBeGreaterThan(0);
        expect(selectorIds(layer.selector).length).toBeGreaterThan(0);
      }
    }
  });

  it("selector id count matches the layer's element semantics", () => {
    for (const name of FIXTURES) {
      const doc = payloadOf(mountFixture(name));
      for (const subplot of doc.subplots) {
        for (const layer of subplot.layers) {
          const ids = selectorIds(layer.selector);
          const semantics = elementSemantics(layer.type);
          if (semantics === "layer") {
            expect(ids).toHaveLength(1);
          } else if (semantics === "series") {
            expect(ids).toHaveLength(seriesLabels(layer).length);
          } else {
            expect(ids).toHaveLength(layer.data.length);
          }
        }
      }
    }
  });
});

describe("parseDocument rejection", () => {
  it("rejects a missing payload", () => {
    expect(() => parseDocument(null)).toThrow(PayloadError);
    expect(() => parseDocument("")).toThrow("accessible data payload is missing");
  });

  it("rejects broken JSON", () => {
    expect(() => parseDocument("{nope")).toThrow(
      "accessible data payload could not be parsed",
    );
  });

  it("rejects a document with no subplots", () => {
    expect(() => parseDocument('{"id":"maidr-1","subplots":[]}')).toThrow(
      "accessible data payload is empty",
    );
  });

  it("rejects an unknown plot type with its name and path", () => {
    const doc = JSON.stringify({
      id: "maidr-1",
      subplots: [
        {
          row: 0,
          col: 0,
          layers: [
            {
              type: "pie",
              axes: { x_label: "", y_label: "", title: "" },
              data: [{ x: "a", y: 1 }],
              selector: '[maidr-id="maidr-1-0"]',
            },
          ],
        },
      ],
    });
    expect(() => parseDocument(doc)).toThrow('unknown plot type "pie"');
    expect(() => parseDocument(doc)).toThrow("$.subplots[0].layers[0].type");
  });

  it("rejects a layer without data", () => {
    const doc = JSON.stringify({
      id: "maidr-1",
      subplots: [
        {
          row: 0,
          col: 0,
          layers: [
            {
              type: "bar",
              axes: { x_label: "", y_label: "", title: "" },
              data: [],
              selector: '[maidr-id="maidr-1-0"]',
            },
          ],
        },
      ],
    });
    expect(() => parseDocument(doc)).toThrow("must be a non-empty array");
  });

  it("rejects non-string axis labels", () => {
    const doc = JSON.stringify({
      id: "maidr-1",
      subplots: [
        {
          row: 0,
          col: 0,
          layers: [
            {
              type: "bar",
              axes: { x_label: 3, y_label: "", title: "" },
              data: [{ x: "a", y: 1 }],
              selector: '[maidr-id="maidr-1-0"]',
            },
          ],
        },
      ],
    });
    expect(() => parseDocument(doc)).toThrow("$.subplots[0].layers[0].axes.x_label");
  });

  it("rejects non-object documents", () => {
    expect(() => parseDocument("[1,2]")).toThrow("must be an object");
    expect(() => parseDocument('"hi"')).toThrow("must be an object");
  });
});

describe("element semantics", () => {
  it("classifies every plot type", () => {
    expect(elementSemantics("multiline")).toBe("series");
    for (const type of ["line", "scatter", "heatmap"] as const) {
      expect(elementSemantics(type)).toBe("layer");
    }
    for (const type of [
      "bar",
      "stacked_bar",
      "dodged_bar",
      "histogram",
      "box_vertical",
      "box_horizontal",
    ] as const) {
      expect(elementSemantics(type)).toBe("point");
    }
  });

  it("parses selector terms in order", () => {
    const selector =
      '[maidr-id="maidr-7-0"],[maidr-id="maidr-7-1"],[maidr-id="maidr-7-2"]';
    expect(selectorIds(selector)).toEqual(["maidr-7-0", "maidr-7-1", "maidr-7-2"]);
    expect(selectorIds("")).toEqual([]);
  });

  it("maps multiline points to their series element", () => {
    const doc = payloadOf(mountFixture("multiline"));
    const layer = doc.subplots[0].layers[0];
    expect(seriesLabels(layer)).toEqual(["alpha", "beta", "gamma"]);
    // 8 points per series in this fixture
    expect(elementIndexFor(layer, 0)).toBe(0);
    expect(elementIndexFor(layer, 7)).toBe(0);
    expect(elementIndexFor(layer, 8)).toBe(1);
    expect(elementIndexFor(layer, 23)).toBe(2);
  });

  it("maps every point of a single-element layer to element 0", () => {
    const doc = payloadOf(mountFixture("line"));
    const layer = doc.subplots[0].layers[0];
    for (let i = 0; i < layer.data.length; i += 1) {
      expect(elementIndexFor(layer, i)).toBe(0);
    }
  });

  it("maps bar points one-to-one", () => {
    const doc = payloadOf(mountFixture("bar"));
    const layer = doc.subplots[0].layers[0];
    for (let i = 0; i < layer.data.length; i += 1) {
      expect(elementIndexFor(layer, i)).toBe(i);
    }
  });
});
