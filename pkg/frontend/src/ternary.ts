/**
 * Simplex trajectory plot for one player of a three-action game.
 *
 * Strategies are barycentric coordinates over the triangle with action 0 at
 * the top vertex, action 1 at the bottom left, action 2 at the bottom right.
 * One polyline per update weight, with start and end markers; an optional
 * reference point (for example an equilibrium) is drawn as a ring.
 */

import type { TrajectorySample } from "./csv.js";
import { seriesColor } from "./color.js";
import { el, textEl, fmt, polylinePoints, svgDoc } from "./svg.js";

export interface TernaryOptions {
  width?: number;
  height?: number;
  title?: string;
  player?: number;
  reference?: [number, number, number];
}

export interface TrajectoryPoint {
  t: number;
  coords: number[];
}

/** Rebuild per-weight coordinate paths for one player from long-form rows. */
export function assemblePaths(
  samples: TrajectorySample[],
  player: number,
): Map<number, TrajectoryPoint[]> {
  const perRound = new Map<number, Map<number, Map<number, number>>>();
  const players = new Set<number>();
  let maxCoord = 0;
  for (const s of samples) {
    players.add(s.player);
    if (s.player !== player) continue;
    maxCoord = Math.max(maxCoord, s.coordIndex);
    let rounds = perRound.get(s.n);
    if (!rounds) perRound.set(s.n, (rounds = new Map()));
    let coords = rounds.get(s.t);
    if (!coords) rounds.set(s.t, (coords = new Map()));
    coords.set(s.coordIndex, s.value);
  }
  if (perRound.size === 0) {
    const seen = [...players].sort((a, b) => a - b).join(", ");
    throw new RangeError(`no rows for player ${player}; file has players ${seen}`);
  }
  const paths = new Map<number, TrajectoryPoint[]>();
  for (const [n, rounds] of [...perRound.entries()].sort((a, b) => a[0] - b[0])) {
    const path: TrajectoryPoint[] = [];
    for (const [t, coords] of [...rounds.entries()].sort((a, b) => a[0] - b[0])) {
      const vec: number[] = [];
      for (let c = 0; c <= maxCoord; c++) {
        const v = coords.get(c);
        if (v === undefined) {
          throw new RangeError(`weight n=${n} round t=${t} is missing coordinate ${c}`);
        }
        vec.push(v);
      }
      path.push({ t, coords: vec });
    }
    paths.set(n, path);
  }
  return paths;
}

type Projector = (coords: number[]) => [number, number];

function makeProjector(width: number, height: number): Projector {
  const margin = 56;
  const side = Math.min(width - 2 * margin, (height - 2 * margin) / (Math.sqrt(3) / 2));
  const tri = side * (Math.sqrt(3) / 2);
  const cx = width / 2;
  const top = (height - tri) / 2;
  const v0: [number, number] = [cx, top];
  const v1: [number, number] = [cx - side / 2, top + tri];
  const v2: [number, number] = [cx + side / 2, top + tri];
  const project: Projector = (coords) => [
    coords[0] * v0[0] + coords[1] * v1[0] + coords[2] * v2[0],
    coords[0] * v0[1] + coords[1] * v1[1] + coords[2] * v2[1],
  ];
  return project;
}

function triangleChrome(project: Projector): string {
  const corners: Array<[number, number, number]> = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
  ];
  const parts: string[] = [];
  // light guide lines at quarter fractions of each coordinate
  for (let axis = 0; axis < 3; axis++) {
    for (const f of [0.25, 0.5, 0.75]) {
      const a: number[] = [0, 0, 0];
      const b: number[] = [0, 0, 0];
      a[axis] = f;
      b[axis] = f;
      a[(axis + 1) % 3] = 1 - f;
      b[(axis + 2) % 3] = 1 - f;
      const [x1, y1] = project(a);
      const [x2, y2] = project(b);
      parts.push(
        el("line", { class: "grid", x1, y1, x2, y2, stroke: "#dddddd", "stroke-width": 0.8 }),
      );
    }
  }
  parts.push(
    el("polygon", {
      class: "outline",
      points: polylinePoints(corners.map(project)),
      fill: "none",
      stroke: "#333333",
      "stroke-width": 1.4,
    }),
  );
  const [x0, y0] = project(corners[0]);
  const [x1, y1] = project(corners[1]);
  const [x2, y2] = project(corners[2]);
  parts.push(textEl(x0, y0 - 8, "action 0", { "text-anchor": "middle", fill: "#333333" }));
  parts.push(textEl(x1 - 6, y1 + 16, "action 1", { "text-anchor": "middle", fill: "#333333" }));
  parts.push(textEl(x2 + 6, y2 + 16, "action 2", { "text-anchor": "middle", fill: "#333333" }));
  return el("g", { class: "chrome" }, parts);
}

export function renderSimplexTrajectory(
  samples: TrajectorySample[],
  options: TernaryOptions = {},
): string {
  const width = options.width ?? 680;
  const height = options.height ?? 620;
  const player = options.player ?? 0;
  const title = options.title ?? `Strategy trajectories on the simplex (player ${player})`;

  const paths = assemblePaths(samples, player);
  for (const [n, path] of paths) {
    const dims = path[0].coords.length;
    if (dims !== 3) {
      throw new RangeError(
        `simplex figure needs exactly 3 actions, weight n=${n} has ${dims}`,
      );
    }
  }

  const project = makeProjector(width, height);
  const body: string[] = [triangleChrome(project)];
  const legend: string[] = [];
  let index = 0;
  for (const [n, path] of paths) {
    const color = seriesColor(index);
    body.push(
      el("polyline", {
        class: "trajectory",
        "data-n": String(n),
        points: polylinePoints(path.map((p) => project(p.coords))),
        fill: "none",
        stroke: color,
        "stroke-width": 1.2,
        "stroke-opacity": 0.85,
      }),
    );
    const [sx, sy] = project(path[0].coords);
    const [ex, ey] = project(path[path.length - 1].coords);
    body.push(
      el("circle", { class: "start", "data-n": String(n), cx: sx, cy: sy, r: 3, fill: color }),
    );
    body.push(
      el("circle", {
        class: "end",
        "data-n": String(n),
        cx: ex,
        cy: ey,
        r: 4.5,
        fill: color,
        stroke: "#111111",
        "stroke-width": 0.8,
      }),
    );
    const ly = 40 + index * 18;
    legend.push(
      el("line", { x1: 24, y1: ly - 4, x2: 42, y2: ly - 4, stroke: color, "stroke-width": 2 }),
    );
    legend.push(textEl(48, ly, `n=${n}`, { fill: "#333333" }));
    index += 1;
  }

  if (options.reference) {
    const [a, b, c] = options.reference;
    const sum = a + b + c;
    if (!(Math.abs(sum - 1) < 1e-6) || a < 0 || b < 0 || c < 0) {
      throw new RangeError(`reference point must lie on the simplex, got ${a},${b},${c}`);
    }
    const [rx, ry] = project([a, b, c]);
    body.push(
      el("circle", {
        class: "reference",
        cx: rx,
        cy: ry,
        r: 6,
        fill: "none",
        stroke: "#111111",
        "stroke-width": 1.6,
      }),
    );
    body.push(
      textEl(rx + 10, ry - 8, `(${fmt(a)}, ${fmt(b)}, ${fmt(c)})`, { fill: "#111111" }),
    );
  }

  body.push(el("g", { class: "legend" }, legend));
  body.push(
    textEl(width / 2, 24, title, { "text-anchor": "middle", "font-size": 15, fill: "#111111" }),
  );
  return svgDoc(width, height, body);
}
