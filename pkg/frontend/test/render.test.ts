import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";

import { main } from "../src/render.js";

const FIXTURES = new URL("./fixtures/", import.meta.url).pathname;
let outDir: string;

beforeAll(() => {
  outDir = mkdtempSync(join(tmpdir(), "render-"));
  vi.spyOn(console, "log").mockImplementation(() => {});
  vi.spyOn(console, "error").mockImplementation(() => {});
});

afterAll(() => {
  rmSync(outDir, { recursive: true, force: true });
  vi.restoreAllMocks();
});

describe("render command", () => {
  it("renders every kind end to end", () => {
    const jobs: Array<[string, string, string[]]> = [
      ["heatmap", "phase_diagram.csv", []],
      ["series", "series.csv", []],
      ["loglog", "scaling.csv", []],
      ["simplex_trajectory", "trajectory.csv", ["--player", "0", "--nash", "0.5,0.25,0.25"]],
    ];
    for (const [kind, file, extra] of jobs) {
      const out = join(outDir, `${kind}.svg`);
      const code = main([kind, join(FIXTURES, file), out, ...extra]);
      expect(code, `render ${kind} exited ${code}`).toBe(0);
      const svg = readFileSync(out, "utf8");
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    }
  });

  it("honors --width and --height", () => {
    const out = join(outDir, "sized.svg");
    const code = main([
      "series",
      join(FIXTURES, "series.csv"),
      out,
      "--width",
      "400",
      "--height",
      "300",
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain('viewBox="0 0 400 300"');
  });

  it("creates missing output directories", () => {
    const out = join(outDir, "nested", "deep", "fig.svg");
    expect(main(["loglog", join(FIXTURES, "scaling.csv"), out])).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("</svg>");
  });

  it("rejects bad usage with exit code 2", () => {
    expect(main([])).toBe(2);
    expect(main(["heatmap", "only_two"])).toBe(2);
    expect(main(["mystery", join(FIXTURES, "series.csv"), join(outDir, "x.svg")])).toBe(2);
    expect(main(["series", join(FIXTURES, "series.csv"), join(outDir, "x.svg"), "--width", "-4"])).toBe(2);
    expect(
      main([
        "simplex_trajectory",
        join(FIXTURES, "trajectory.csv"),
        join(outDir, "x.svg"),
        "--nash",
        "0.5,0.5",
      ]),
    ).toBe(2);
  });

  it("rejects unreadable input and schema mismatches with exit code 2", () => {
    expect(main(["heatmap", join(outDir, "missing.csv"), join(outDir, "x.svg")])).toBe(2);
    // series table fed to the heatmap renderer
    expect(main(["heatmap", join(FIXTURES, "series.csv"), join(outDir, "x.svg")])).toBe(2);
    const malformed = join(outDir, "malformed.csv");
    writeFileSync(malformed, "n,t,reg_total\n1,oops,3\n");
    expect(main(["series", malformed, join(outDir, "x.svg")])).toBe(2);
  });
});
