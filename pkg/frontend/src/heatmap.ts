/**
 * Parameter-sweep heatmap: total regret over a (delay m, weight n) grid.
 *
 * Cells are colored by log10 of total regret, dark for low regret. A dashed
 * guide marks the stability boundary between n <= m (divergent recurrence)
 * and n >= m + 1 (contractive recurrence), so the low-regret band is easy
 * to read against it.
 */

import type { PhaseCell } from "./csv.js";
import { viridis } from "./color.js";
import { extent, linearScale } from "./scales.js";
import { el, textEl, fmt, svgDoc } from "./svg.js";

export interface HeatmapOptions {
  width?: number;
  height?: number;
  title?: string;
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function isConsecutive(values: number[]): boolean {
  return values.every((v, i) => i === 0 || v === values[i - 1] + 1);
}

function colorbar(
  x: number,
  top: number,
  height: number,
  lo: number,
  hi: number,
): string {
  const steps = 64;
  const parts: string[] = [];
  const band = height / steps;
  for (let i = 0; i < steps; i++) {
    // i = 0 at the top of the bar, which carries the highest value
    const t = 1 - i / (steps - 1);
    parts.push(
      el("rect", {
        x,
        y: top + i * band,
        width: 14,
        height: band + 0.5,
        fill: viridis(t),
      }),
    );
  }
  parts.push(
    el("rect", { x, y: top, width: 14, height, fill: "none", stroke: "#333333" }),
  );
  parts.push(textEl(x + 18, top + 10, fmt(hi), { fill: "#333333" }));
  parts.push(textEl(x + 18, top + height, fmt(lo), { fill: "#333333" }));
  parts.push(
    textEl(x + 18, top + height / 2, "log10 RegTot", {
      fill: "#111111",
      transform: `rotate(-90 ${fmt(x + 18)} ${fmt(top + height / 2)})`,
      "text-anchor": "middle",
    }),
  );
  return el("g", { class: "colorbar" }, parts);
}

export function renderHeatmap(cells: PhaseCell[], options: HeatmapOptions = {}): string {
  const width = options.width ?? 760;
  const height = options.height ?? 600;
  const title = options.title ?? "Total regret by delay and update weight";
  const margin = { left: 64, right: 96, top: 48, bottom: 56 };

  const ms = uniqueSorted(cells.map((c) => c.m));
  const ns = uniqueSorted(cells.map((c) => c.n));
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;
  const cw = plotW / ms.length;
  const ch = plotH / ns.length;
  const col = new Map(ms.map((m, i) => [m, i]));
  const row = new Map(ns.map((n, j) => [n, j]));

  const [lo, hi] = extent(cells.map((c) => c.log10Reg));
  const span = hi - lo || 1;

  const body: string[] = [];
  for (const cell of cells) {
    const i = col.get(cell.m)!;
    const j = row.get(cell.n)!;
    const x = margin.left + i * cw;
    // n grows upward
    const y = margin.top + plotH - (j + 1) * ch;
    const fill = viridis((cell.log10Reg - lo) / span);
    const label = `m=${cell.m} n=${cell.n} RegTot=${cell.regTotal.toPrecision(6)}`;
    body.push(
      el(
        "rect",
        {
          class: "cell",
          "data-m": String(cell.m),
          "data-n": String(cell.n),
          x,
          y,
          width: cw + 0.5,
          height: ch + 0.5,
          fill,
        },
        [el("title", {}, [label])],
      ),
    );
  }

  // stability boundary n = m + 1/2, only meaningful on a gap-free integer grid
  if (isConsecutive(ms) && isConsecutive(ns)) {
    const mToX = linearScale(
      [ms[0] - 0.5, ms[ms.length - 1] + 0.5],
      [margin.left, margin.left + plotW],
    );
    const nToY = linearScale(
      [ns[0] - 0.5, ns[ns.length - 1] + 0.5],
      [margin.top + plotH, margin.top],
    );
    const mLo = Math.max(ms[0] - 0.5, ns[0] - 1);
    const mHi = Math.min(ms[ms.length - 1] + 0.5, ns[ns.length - 1]);
    if (mHi > mLo) {
      body.push(
        el("line", {
          class: "stability-boundary",
          x1: mToX(mLo),
          y1: nToY(mLo + 0.5),
          x2: mToX(mHi),
          y2: nToY(mHi + 0.5),
          stroke: "#ffffff",
          "stroke-width": 2,
          "stroke-dasharray": "6 4",
        }),
      );
    }
  }

  const mStep = Math.max(1, Math.ceil(ms.length / 16));
  ms.forEach((m, i) => {
    if (i % mStep !== 0) return;
    const x = margin.left + (i + 0.5) * cw;
    body.push(
      textEl(x, margin.top + plotH + 16, String(m), {
        "text-anchor": "middle",
        fill: "#333333",
      }),
    );
  });
  const nStep = Math.max(1, Math.ceil(ns.length / 18));
  ns.forEach((n, j) => {
    if (j % nStep !== 0) return;
    const y = margin.top + plotH - (j + 0.5) * ch;
    body.push(
      textEl(margin.left - 8, y + 4, String(n), { "text-anchor": "end", fill: "#333333" }),
    );
  });

  body.push(
    textEl(margin.left + plotW / 2, margin.top + plotH + 40, "delay m", {
      "text-anchor": "middle",
      fill: "#111111",
    }),
  );
  body.push(
    textEl(margin.left - 40, margin.top + plotH / 2, "weight n", {
      "text-anchor": "middle",
      fill: "#111111",
      transform: `rotate(-90 ${fmt(margin.left - 40)} ${fmt(margin.top + plotH / 2)})`,
    }),
  );
  body.push(
    textEl(width / 2, 24, title, { "text-anchor": "middle", "font-size": 15, fill: "#111111" }),
  );
  body.push(colorbar(margin.left + plotW + 18, margin.top, plotH, lo, hi));

  return svgDoc(width, height, body);
}
