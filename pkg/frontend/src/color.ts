/** Color ramps and the categorical line palette. */

// viridis sampled at 17 evenly spaced points
const VIRIDIS: string[] = [
  "#440154", "#48186a", "#472d7b", "#424086", "#3b528b", "#33638d",
  "#2c728e", "#26828e", "#21918c", "#1fa088", "#28ae80", "#3fbc73",
  "#5ec962", "#84d44b", "#addc30", "#d8e219", "#fde725",
];

const CATEGORICAL: string[] = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

function hexChannel(hex: string, index: number): number {
  return parseInt(hex.slice(1 + 2 * index, 3 + 2 * index), 16);
}

function mixHex(a: string, b: string, t: number): string {
  let out = "#";
  for (let c = 0; c < 3; c++) {
    const v = Math.round(hexChannel(a, c) * (1 - t) + hexChannel(b, c) * t);
    out += v.toString(16).padStart(2, "0");
  }
  return out;
}

/** Perceptually uniform dark-to-bright ramp; t is clamped to [0, 1]. */
export function viridis(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (VIRIDIS.length - 1);
  const i = Math.min(VIRIDIS.length - 2, Math.floor(pos));
  return mixHex(VIRIDIS[i], VIRIDIS[i + 1], pos - i);
}

/** Stable color for the i-th line of a chart. */
export function seriesColor(i: number): string {
  return CATEGORICAL[((i % CATEGORICAL.length) + CATEGORICAL.length) % CATEGORICAL.length];
}
