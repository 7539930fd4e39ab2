import { describe, expect, it } from "vitest";
import { existsSync, mkdtempSync, readFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { main } from "../src/cli.js";

const FIXTURES = join(__dirname, "fixtures");

function outPath(name: string): string {
  return join(mkdtempSync(join(tmpdir(), "qdpump-cli-")), name);
}

describe("cli", () => {
  it("renders a heatmap from a sweep CSV", () => {
    const out = outPath("fig3.svg");
    const code = main(["plot-heatmap", "--in", join(FIXTURES, "fig3_sweep.csv"),
                       "--out", out]);
    expect(code).toBe(0);
    expect(existsSync(out)).toBe(true);
    expect(readFileSync(out, "utf8")).toContain("<svg");
  });

  it("renders trajectories from a comma-separated list", () => {
    const out = outPath("fig5a.svg");
    const code = main(["plot-trajectories",
                       "--in", join(FIXTURES, "fig5a_run.csv"), "--out", out]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("temp-right");
  });

  it("refuses a schema mismatch with exit code 1", () => {
    const out = outPath("bad.svg");
    const code = main(["plot-trajectories",
                       "--in", join(FIXTURES, "fig3_sweep.csv"), "--out", out]);
    expect(code).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it("rejects unknown commands and missing arguments", () => {
    expect(main(["plot-everything", "--in", "x", "--out", "y"])).toBe(1);
    expect(main(["plot-heatmap", "--in", "only-in.csv"])).toBe(1);
  });
});
