import { beforeEach, describe, expect, it } from "vitest";

import { BAND_CHARS, bandIndex, brailleFor, brailleLine } from "../src/braille";
import type { HeatmapGrid, Layer } from "../src/schema";
import { mountFixture, payloadOf, resetDom } from "./helpers";

beforeEach(resetDom);

function layerOf(name: Parameters<typeof mountFixture>[0]): Layer {
  return payloadOf(mountFixture(name)).subplots[0].layers[0];
}

describe("bandIndex", () => {
  it("splits the range into four floor bands", () => {
    expect(bandIndex(0, 0, 3)).toBe(0);
    expect(bandIndex(0.99, 0, 3)).toBe(0);
    expect(bandIndex(1, 0, 3)).toBe(1);
    expect(bandIndex(1.99, 0, 3)).toBe(1);
    expect(bandIndex(2, 0, 3)).toBe(2);
    expect(bandIndex(2.99, 0, 3)).toBe(2);
  });

  it("clamps the maximum into the top band", () => {
    // 3 * (max - min) / range is exactly 3; without the clamp it
    // would index past the last character
    expect(bandIndex(3, 0, 3)).toBe(3);
    expect(bandIndex(100, 0, 3)).toBe(3);
    expect(bandIndex(-5, 0, 3)).toBe(0);
  });

  it("maps a zero range to the second band, the midpoint convention", () => {
    expect(bandIndex(7, 7, 7)).toBe(1);
    expect(BAND_CHARS[bandIndex(7, 7, 7)]).toBe("⣤");
  });
});

describe("brailleLine", () => {
  it("renders one cell per value over the values' own range", () => {
    expect(brailleLine([0, 1, 2, 3])).toBe("⣀⣤⣶⣿");
  });

  it("renders the bar fixture's frozen band string", () => {
    // values 14 13 79 50 59 60 71 3 over range [3, 79]
    expect(brailleLine([14, 13, 79, 50, 59, 60, 71, 3])).toBe(
      "⣀⣀⣿⣤⣶⣶⣶⣀",
    );
  });

  it("renders a constant series in the second band", () => {
    expect(brailleLine([5, 5, 5])).toBe("⣤⣤⣤");
  });

  it("renders nothing for no values", () => {
    expect(brailleLine([])).toBe("");
  });
});

describe("brailleFor", () => {
  it("matches brailleLine over the layer's values for point layers", () => {
    expect(brailleFor(layerOf("bar"))).toBe(
      "⣀⣀⣿⣤⣶⣶⣶⣀",
    );
    expect(brailleFor(layerOf("multiline"))).toHaveLength(24);
  });

  it("uses box medians", () => {
    const strip = brailleFor(layerOf("vertical_box"));
    expect(strip).toHaveLength(3);
    // medians ascend across the three boxes, so the bands do too
    expect(strip[0]).toBe("⣀");
    expect(strip[2]).toBe("⣿");
  });

  it("renders a heatmap as one space-separated run per row", () => {
    const layer = layerOf("heatmap");
    const strip = brailleFor(layer);
    const rows = strip.split(" ");
    expect(rows).toHaveLength(8);
    for (const row of rows) {
      expect([...row]).toHaveLength(8);
      for (const cell of row) {
        expect(BAND_CHARS).toContain(cell);
      }
    }
    // bands come from the whole grid's range, so the global extremes
    // land in the first and last bands
    const grid = layer.data[0] as HeatmapGrid;
    const flat = grid.values.flat();
    const joined = rows.join("");
    expect(joined[flat.indexOf(Math.min(...flat))]).toBe("⣀");
    expect(joined[flat.indexOf(Math.max(...flat))]).toBe("⣿");
  });
});
