/**
 * Typed readers for the CSV tables produced by the simulation CLI.
 *
 * Each reader checks the exact header before touching any row, so a file
 * passed to the wrong figure kind fails loudly instead of rendering noise.
 */

import Papa from "papaparse";

export class CsvError extends Error {}

/** Heatmap input: one row per (delay, weight) cell of a parameter sweep. */
export interface PhaseCell {
  m: number;
  n: number;
  eta: number;
  T: number;
  regTotal: number;
  log10Reg: number;
}

/** Series input: running total regret sampled at selected rounds. */
export interface SeriesPoint {
  n: number;
  t: number;
  regTotal: number;
}

/** Log-log input: final regret for each horizon and step-size rule. */
export interface ScalingPoint {
  T: number;
  etaRule: string;
  eta: number;
  regTotal: number;
}

/** Trajectory input: one coordinate of one player's strategy at one round. */
export interface TrajectorySample {
  n: number;
  t: number;
  player: number;
  coordIndex: number;
  value: number;
  dis: number;
}

export const PHASE_HEADER = ["m", "n", "eta", "T", "reg_total", "log10_reg"];
export const SERIES_HEADER = ["n", "t", "reg_total"];
export const SCALING_HEADER = ["T", "eta_rule", "eta", "reg_total"];
export const TRAJECTORY_HEADER = ["n", "t", "player", "coord_index", "value", "dis"];

function parseTable(text: string, source: string): string[][] {
  if (text.trim() === "") {
    throw new CsvError(`${source}: empty file`);
  }
  const result = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (result.errors.length > 0) {
    const first = result.errors[0];
    const where = first.row === undefined ? "" : ` (row ${first.row + 1})`;
    throw new CsvError(`${source}: ${first.message}${where}`);
  }
  return result.data;
}

function requireHeader(actual: string[], expected: string[], source: string): void {
  const got = actual.join(",");
  const want = expected.join(",");
  if (got !== want) {
    throw new CsvError(`${source}: expected header "${want}", got "${got}"`);
  }
}

function num(field: string, column: string, row: number, source: string): number {
  const value = Number(field);
  if (field.trim() === "" || !Number.isFinite(value)) {
    throw new CsvError(`${source}: row ${row}: column ${column}: not a number: "${field}"`);
  }
  return value;
}

function readRows<T>(
  text: string,
  source: string,
  header: string[],
  build: (fields: string[], grab: (column: string) => number, row: number) => T,
): T[] {
  const table = parseTable(text, source);
  requireHeader(table[0], header, source);
  const out: T[] = [];
  for (let i = 1; i < table.length; i++) {
    const fields = table[i];
    if (fields.length !== header.length) {
      throw new CsvError(
        `${source}: row ${i + 1}: expected ${header.length} fields, got ${fields.length}`,
      );
    }
    const grab = (column: string) => num(fields[header.indexOf(column)], column, i + 1, source);
    out.push(build(fields, grab, i + 1));
  }
  if (out.length === 0) {
    throw new CsvError(`${source}: no data rows`);
  }
  return out;
}

export function readPhaseDiagram(text: string, source = "phase_diagram"): PhaseCell[] {
  return readRows(text, source, PHASE_HEADER, (_fields, grab) => ({
    m: grab("m"),
    n: grab("n"),
    eta: grab("eta"),
    T: grab("T"),
    regTotal: grab("reg_total"),
    log10Reg: grab("log10_reg"),
  }));
}

export function readSeries(text: string, source = "series"): SeriesPoint[] {
  return readRows(text, source, SERIES_HEADER, (_fields, grab) => ({
    n: grab("n"),
    t: grab("t"),
    regTotal: grab("reg_total"),
  }));
}

export function readScaling(text: string, source = "scaling"): ScalingPoint[] {
  return readRows(text, source, SCALING_HEADER, (fields, grab) => ({
    T: grab("T"),
    etaRule: fields[SCALING_HEADER.indexOf("eta_rule")],
    eta: grab("eta"),
    regTotal: grab("reg_total"),
  }));
}

export function readTrajectory(text: string, source = "trajectory"): TrajectorySample[] {
  return readRows(text, source, TRAJECTORY_HEADER, (_fields, grab) => ({
    n: grab("n"),
    t: grab("t"),
    player: grab("player"),
    coordIndex: grab("coord_index"),
    value: grab("value"),
    dis: grab("dis"),
  }));
}
