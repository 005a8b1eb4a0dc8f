/**
 * Log-log scaling study: final regret against horizon T per step-size rule.
 *
 * Each rule gets scatter points plus a least-squares line fitted in log-log
 * space; the fitted exponent is printed next to the line and exposed as a
 * data attribute so the figure itself documents the measured growth rate.
 */

import type { ScalingPoint } from "./csv.js";
import { seriesColor } from "./color.js";
import { extent, fitLine, linearScale, niceTicks } from "./scales.js";
import { plotFrame, xAxis, yAxis, type Frame } from "./axes.js";
import { el, textEl, svgDoc } from "./svg.js";

export interface LogLogOptions {
  width?: number;
  height?: number;
  title?: string;
}

export function groupByRule(points: ScalingPoint[]): Map<string, ScalingPoint[]> {
  const groups = new Map<string, ScalingPoint[]>();
  for (const p of points) {
    const bucket = groups.get(p.etaRule);
    if (bucket) bucket.push(p);
    else groups.set(p.etaRule, [p]);
  }
  for (const bucket of groups.values()) {
    bucket.sort((a, b) => a.T - b.T);
  }
  return new Map([...groups.entries()].sort((a, b) => a[0].localeCompare(b[0])));
}

export function renderLogLog(points: ScalingPoint[], options: LogLogOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 540;
  const title = options.title ?? "Regret growth against horizon";
  const frame: Frame = { left: 76, top: 48, width: width - 76 - 170, height: height - 48 - 64 };

  for (const p of points) {
    if (p.T <= 0 || p.regTotal <= 0) {
      throw new RangeError(
        `log-log figure needs positive T and RegTot, got T=${p.T} RegTot=${p.regTotal}`,
      );
    }
  }

  // both axes live in log10 space on linear scales
  const logT = points.map((p) => Math.log10(p.T));
  const logR = points.map((p) => Math.log10(p.regTotal));
  const [xLo, xHi] = extent(logT);
  const [yLo, yHi] = extent(logR);
  const xPad = 0.05 * (xHi - xLo || 1);
  const yPad = 0.08 * (yHi - yLo || 1);
  const x = linearScale([xLo - xPad, xHi + xPad], [frame.left, frame.left + frame.width]);
  const y = linearScale([yLo - yPad, yHi + yPad], [frame.top + frame.height, frame.top]);

  const body: string[] = [plotFrame(frame)];
  let index = 0;
  for (const [rule, bucket] of groupByRule(points)) {
    const color = seriesColor(index);
    const bx = bucket.map((p) => Math.log10(p.T));
    const by = bucket.map((p) => Math.log10(p.regTotal));
    for (let i = 0; i < bucket.length; i++) {
      body.push(
        el("circle", {
          class: "scaling-point",
          "data-rule": rule,
          cx: x(bx[i]),
          cy: y(by[i]),
          r: 4,
          fill: color,
        }),
      );
    }

    const fit = fitLine(bx, by);
    const x0 = x.domain[0];
    const x1 = x.domain[1];
    body.push(
      el("line", {
        class: "fit-line",
        "data-rule": rule,
        x1: x(x0),
        y1: y(fit.intercept + fit.slope * x0),
        x2: x(x1),
        y2: y(fit.intercept + fit.slope * x1),
        stroke: color,
        "stroke-width": 1.4,
        "stroke-dasharray": "5 3",
      }),
    );
    const labelY = frame.top + 16 + index * 18;
    body.push(
      textEl(
        frame.left + frame.width + 14,
        labelY,
        `${rule}: slope ${fit.slope.toFixed(3)}`,
        {
          class: "slope-label",
          "data-rule": rule,
          "data-slope": fit.slope.toFixed(6),
          fill: color,
        },
      ),
    );
    index += 1;
  }

  const xTicks = niceTicks(x.domain[0], x.domain[1], 6).filter(Number.isInteger);
  const yTicks = niceTicks(y.domain[0], y.domain[1], 6);
  const xAxisTicks = xTicks.length >= 2 ? xTicks : niceTicks(x.domain[0], x.domain[1], 6);
  body.push(xAxis(frame, x, xAxisTicks, "log10 T"));
  body.push(yAxis(frame, y, yTicks, "log10 RegTot"));
  body.push(
    textEl(width / 2, 24, title, { "text-anchor": "middle", "font-size": 15, fill: "#111111" }),
  );
  return svgDoc(width, height, body);
}
