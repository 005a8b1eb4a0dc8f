#!/usr/bin/env node
/**
 * Command line renderer: turns CSV tables from the simulation CLI into SVG.
 *
 *   render <kind> <input.csv> <output.svg> [options]
 *
 * Kinds and the table layout each expects:
 *   heatmap             m,n,eta,T,reg_total,log10_reg
 *   series              n,t,reg_total
 *   loglog              T,eta_rule,eta,reg_total
 *   simplex_trajectory  n,t,player,coord_index,value,dis
 *
 * Options: --width, --height, --title, and for simplex_trajectory
 * --player K (default 0) and --nash a,b,c to mark an equilibrium.
 *
 * Exit codes: 0 written, 2 bad usage or unreadable input.
 */

import { parseArgs } from "node:util";
import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { dirname, resolve } from "node:path";
import { pathToFileURL } from "node:url";

import { CsvError, readPhaseDiagram, readScaling, readSeries, readTrajectory } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderSeries } from "./series.js";
import { renderLogLog } from "./loglog.js";
import { renderSimplexTrajectory } from "./ternary.js";

export const KINDS = ["heatmap", "series", "loglog", "simplex_trajectory"] as const;
export type Kind = (typeof KINDS)[number];

const USAGE = `usage: render <kind> <input.csv> <output.svg> [options]
  kinds: ${KINDS.join(", ")}
  options: --width PX --height PX --title TEXT
           --player K --nash A,B,C   (simplex_trajectory only)`;

class UsageError extends Error {}

function positiveInt(raw: string, flag: string): number {
  const value = Number(raw);
  if (!Number.isInteger(value) || value <= 0) {
    throw new UsageError(`${flag} expects a positive integer, got "${raw}"`);
  }
  return value;
}

function parseNash(raw: string): [number, number, number] {
  const parts = raw.split(",").map(Number);
  if (parts.length !== 3 || parts.some((v) => !Number.isFinite(v))) {
    throw new UsageError(`--nash expects three comma-separated numbers, got "${raw}"`);
  }
  return [parts[0], parts[1], parts[2]];
}

export function main(argv: string[]): number {
  let kind: string;
  let input: string;
  let output: string;
  let values: Record<string, string | undefined>;
  try {
    const parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        width: { type: "string" },
        height: { type: "string" },
        title: { type: "string" },
        player: { type: "string" },
        nash: { type: "string" },
      },
    });
    if (parsed.positionals.length !== 3) {
      throw new UsageError(
        `expected 3 arguments (kind, input, output), got ${parsed.positionals.length}`,
      );
    }
    [kind, input, output] = parsed.positionals;
    values = parsed.values;
    if (!(KINDS as readonly string[]).includes(kind)) {
      throw new UsageError(`unknown kind "${kind}"; pick one of ${KINDS.join(", ")}`);
    }
  } catch (err) {
    console.error(err instanceof Error ? err.message : String(err));
    console.error(USAGE);
    return 2;
  }

  try {
    const width = values.width === undefined ? undefined : positiveInt(values.width, "--width");
    const height =
      values.height === undefined ? undefined : positiveInt(values.height, "--height");
    const common = { width, height, title: values.title };

    let text: string;
    try {
      text = readFileSync(input, "utf8");
    } catch {
      throw new UsageError(`cannot read input file: ${input}`);
    }

    let svg: string;
    switch (kind as Kind) {
      case "heatmap":
        svg = renderHeatmap(readPhaseDiagram(text, input), common);
        break;
      case "series":
        svg = renderSeries(readSeries(text, input), common);
        break;
      case "loglog":
        svg = renderLogLog(readScaling(text, input), common);
        break;
      case "simplex_trajectory": {
        const player =
          values.player === undefined ? 0 : positiveIntOrZero(values.player, "--player");
        const reference = values.nash === undefined ? undefined : parseNash(values.nash);
        svg = renderSimplexTrajectory(readTrajectory(text, input), {
          ...common,
          player,
          reference,
        });
        break;
      }
    }

    mkdirSync(dirname(resolve(output)), { recursive: true });
    writeFileSync(output, svg);
    console.log(`wrote ${output}`);
    return 0;
  } catch (err) {
    if (err instanceof UsageError || err instanceof CsvError || err instanceof RangeError) {
      console.error(err.message);
      return 2;
    }
    throw err;
  }
}

function positiveIntOrZero(raw: string, flag: string): number {
  const value = Number(raw);
  if (!Number.isInteger(value) || value < 0) {
    throw new UsageError(`${flag} expects a nonnegative integer, got "${raw}"`);
  }
  return value;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(resolve(process.argv[1])).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
