/** Running total regret against round number, one line per update weight. */

import type { SeriesPoint } from "./csv.js";
import { seriesColor } from "./color.js";
import { decadeTicks, extent, linearScale, logScale, niceTicks } from "./scales.js";
import { plotFrame, xAxis, yAxis, type Frame } from "./axes.js";
import { el, textEl, polylinePoints, svgDoc } from "./svg.js";

export interface SeriesOptions {
  width?: number;
  height?: number;
  title?: string;
}

export function groupSeries(points: SeriesPoint[]): Map<number, SeriesPoint[]> {
  const groups = new Map<number, SeriesPoint[]>();
  for (const p of points) {
    const bucket = groups.get(p.n);
    if (bucket) bucket.push(p);
    else groups.set(p.n, [p]);
  }
  for (const bucket of groups.values()) {
    bucket.sort((a, b) => a.t - b.t);
  }
  return new Map([...groups.entries()].sort((a, b) => a[0] - b[0]));
}

export function renderSeries(points: SeriesPoint[], options: SeriesOptions = {}): string {
  const width = options.width ?? 760;
  const height = options.height ?? 540;
  const title = options.title ?? "Total regret over time by update weight";
  const frame: Frame = { left: 72, top: 48, width: width - 72 - 150, height: height - 48 - 64 };

  const groups = groupSeries(points);
  const [tLo, tHi] = extent(points.map((p) => p.t));
  const [rLo, rHi] = extent(points.map((p) => p.regTotal));
  const x = logScale([Math.max(1, tLo), tHi], [frame.left, frame.left + frame.width]);
  const y = linearScale(
    [Math.min(0, rLo), rHi * 1.02],
    [frame.top + frame.height, frame.top],
  );

  const body: string[] = [plotFrame(frame)];
  let index = 0;
  const legend: string[] = [];
  for (const [n, bucket] of groups) {
    const color = seriesColor(index);
    body.push(
      el("polyline", {
        class: "series-line",
        "data-n": String(n),
        points: polylinePoints(bucket.map((p) => [x(p.t), y(p.regTotal)])),
        fill: "none",
        stroke: color,
        "stroke-width": 1.6,
      }),
    );
    const ly = frame.top + 14 + index * 18;
    const lx = frame.left + frame.width + 16;
    legend.push(
      el("line", { x1: lx, y1: ly - 4, x2: lx + 18, y2: ly - 4, stroke: color, "stroke-width": 2 }),
    );
    legend.push(textEl(lx + 24, ly, `n=${n}`, { fill: "#333333" }));
    index += 1;
  }

  body.push(xAxis(frame, x, decadeTicks(x.domain[0], x.domain[1]), "round t"));
  body.push(yAxis(frame, y, niceTicks(y.domain[0], y.domain[1], 6), "RegTot"));
  body.push(el("g", { class: "legend" }, legend));
  body.push(
    textEl(width / 2, 24, title, { "text-anchor": "middle", "font-size": 15, fill: "#111111" }),
  );
  return svgDoc(width, height, body);
}
