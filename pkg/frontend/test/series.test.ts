import { describe, expect, it } from "vitest";

import { readSeries } from "../src/csv.js";
import { groupSeries, renderSeries } from "../src/series.js";
import { fixture } from "./fixtures.js";

const POINTS = readSeries(fixture("series.csv"));
const WIDTH = 760;
const HEIGHT = 540;
const SVG = renderSeries(POINTS, { width: WIDTH, height: HEIGHT });

describe("series figure", () => {
  it("draws one line per update weight in ascending order", () => {
    const ns = [...SVG.matchAll(/<polyline class="series-line" data-n="(\d+)"/g)].map((m) =>
      Number(m[1]),
    );
    expect(ns).toEqual([1, 3, 5, 7, 9, 11, 13, 15]);
  });

  it("keeps every vertex inside the document", () => {
    for (const match of SVG.matchAll(/<polyline class="series-line"[^>]*points="([^"]+)"/g)) {
      for (const pair of match[1].split(" ")) {
        const [px, py] = pair.split(",").map(Number);
        expect(px).toBeGreaterThanOrEqual(0);
        expect(px).toBeLessThanOrEqual(WIDTH);
        expect(py).toBeGreaterThanOrEqual(0);
        expect(py).toBeLessThanOrEqual(HEIGHT);
      }
    }
  });

  it("shows a legend entry for every weight", () => {
    for (const n of [1, 3, 5, 7, 9, 11, 13, 15]) {
      expect(SVG).toContain(`n=${n}</text>`);
    }
  });

  it("labels the axes", () => {
    expect(SVG).toContain("round t");
    expect(SVG).toContain("RegTot");
  });
});

describe("groupSeries", () => {
  it("sorts by weight and then by round", () => {
    const groups = groupSeries([
      { n: 5, t: 10, regTotal: 2 },
      { n: 1, t: 1, regTotal: 0 },
      { n: 5, t: 1, regTotal: 1 },
    ]);
    expect([...groups.keys()]).toEqual([1, 5]);
    expect(groups.get(5)!.map((p) => p.t)).toEqual([1, 10]);
  });
});
