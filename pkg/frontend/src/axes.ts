/** Shared chart frame and axis drawing for the line-based figures. */

import { el, textEl, fmt } from "./svg.js";
import type { Scale } from "./scales.js";

export interface Frame {
  left: number;
  top: number;
  width: number;
  height: number;
}

export function frameRight(frame: Frame): number {
  return frame.left + frame.width;
}

export function frameBottom(frame: Frame): number {
  return frame.top + frame.height;
}

export function tickLabel(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    const exp = Math.floor(Math.log10(magnitude));
    const mantissa = Math.round((value / Math.pow(10, exp)) * 100) / 100;
    return mantissa === 1 ? `1e${exp}` : `${mantissa}e${exp}`;
  }
  return fmt(value);
}

export function plotFrame(frame: Frame): string {
  return el("rect", {
    class: "frame",
    x: frame.left,
    y: frame.top,
    width: frame.width,
    height: frame.height,
    fill: "none",
    stroke: "#999999",
  });
}

export function xAxis(frame: Frame, scale: Scale, ticks: number[], label: string): string {
  const y = frameBottom(frame);
  const parts: string[] = [];
  for (const tick of ticks) {
    const x = scale(tick);
    parts.push(el("line", { x1: x, y1: y, x2: x, y2: y + 5, stroke: "#333333" }));
    parts.push(textEl(x, y + 18, tickLabel(tick), { "text-anchor": "middle", fill: "#333333" }));
  }
  parts.push(
    textEl(frame.left + frame.width / 2, y + 36, label, {
      "text-anchor": "middle",
      fill: "#111111",
    }),
  );
  return el("g", { class: "x-axis" }, parts);
}

export function yAxis(frame: Frame, scale: Scale, ticks: number[], label: string): string {
  const x = frame.left;
  const parts: string[] = [];
  for (const tick of ticks) {
    const y = scale(tick);
    parts.push(el("line", { x1: x - 5, y1: y, x2: x, y2: y, stroke: "#333333" }));
    parts.push(
      textEl(x - 8, y + 4, tickLabel(tick), { "text-anchor": "end", fill: "#333333" }),
    );
  }
  const cx = frame.left - 44;
  const cy = frame.top + frame.height / 2;
  parts.push(
    textEl(cx, cy, label, {
      "text-anchor": "middle",
      fill: "#111111",
      transform: `rotate(-90 ${fmt(cx)} ${fmt(cy)})`,
    }),
  );
  return el("g", { class: "y-axis" }, parts);
}
