import { readFileSync } from "node:fs";

/** Load a CSV fixture produced by the simulation CLI (see README). */
export function fixture(name: string): string {
  return readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8");
}
