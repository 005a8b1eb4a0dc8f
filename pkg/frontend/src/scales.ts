/** Coordinate scales, tick generation, and least-squares fitting. */

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

function makeScale(
  domain: [number, number],
  range: [number, number],
  transform: (v: number) => number,
): Scale {
  const [d0, d1] = [transform(domain[0]), transform(domain[1])];
  const span = d1 - d0;
  const scale = ((value: number) => {
    const t = span === 0 ? 0.5 : (transform(value) - d0) / span;
    return range[0] + t * (range[1] - range[0]);
  }) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  return makeScale(domain, range, (v) => v);
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  if (domain[0] <= 0 || domain[1] <= 0) {
    throw new RangeError(`log scale needs a positive domain, got [${domain[0]}, ${domain[1]}]`);
  }
  return makeScale(domain, range, Math.log10);
}

export function extent(values: Iterable<number>): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo > hi) throw new RangeError("extent of empty sequence");
  return [lo, hi];
}

/** Round tick steps to 1, 2, or 5 times a power of ten. */
function niceStep(rawStep: number): number {
  const power = Math.floor(Math.log10(rawStep));
  const base = Math.pow(10, power);
  const fraction = rawStep / base;
  if (fraction <= 1) return base;
  if (fraction <= 2) return 2 * base;
  if (fraction <= 5) return 5 * base;
  return 10 * base;
}

export function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) return [lo];
  const step = niceStep((hi - lo) / Math.max(1, count));
  const first = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  // guard against float drift past hi
  for (let v = first; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten covering [lo, hi], for log-scaled axes. */
export function decadeTicks(lo: number, hi: number): number[] {
  const first = Math.ceil(Math.log10(lo) - 1e-9);
  const last = Math.floor(Math.log10(hi) + 1e-9);
  const ticks: number[] = [];
  for (let k = first; k <= last; k++) {
    ticks.push(Math.pow(10, k));
  }
  return ticks;
}

export interface LineFit {
  slope: number;
  intercept: number;
}

export function fitLine(xs: number[], ys: number[]): LineFit {
  if (xs.length !== ys.length || xs.length < 2) {
    throw new RangeError(`line fit needs two or more paired points, got ${xs.length}`);
  }
  const n = xs.length;
  let sx = 0;
  let sy = 0;
  let sxx = 0;
  let sxy = 0;
  for (let i = 0; i < n; i++) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const denom = n * sxx - sx * sx;
  if (denom === 0) throw new RangeError("line fit is degenerate: all x values equal");
  const slope = (n * sxy - sx * sy) / denom;
  return { slope, intercept: (sy - slope * sx) / n };
}
