#!/usr/bin/env node
/**
 * Figure rendering CLI.
 *
 *   qdpump-figures plot-heatmap --in sweep.csv --out fig3.svg
 *   qdpump-figures plot-trajectories --in run1.csv,run2.csv --out fig4.svg
 *
 * Exit codes: 0 success, 1 bad arguments or schema violation.
 */

import { writeFileSync } from "fs";
import { SchemaError, readSweepCsv, readTrajectoryCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderTrajectories } from "./trajectories.js";

function parseArgs(argv: string[]): { command: string; input: string; output: string } {
  const [command, ...rest] = argv;
  let input = "";
  let output = "";
  for (let i = 0; i < rest.length; i++) {
    const arg = rest[i];
    if (arg === "--in") input = rest[++i] ?? "";
    else if (arg.startsWith("--in=")) input = arg.slice(5);
    else if (arg === "--out") output = rest[++i] ?? "";
    else if (arg.startsWith("--out=")) output = arg.slice(6);
    else throw new Error(`unknown argument '${arg}'`);
  }
  if (!command || !input || !output) {
    throw new Error(
      "usage: plot-heatmap --in sweep.csv --out fig.svg | " +
        "plot-trajectories --in a.csv[,b.csv...] --out fig.svg",
    );
  }
  return { command, input, output };
}

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`qdpump-figures: ${(err as Error).message}`);
    return 1;
  }
  try {
    let svg: string;
    if (args.command === "plot-heatmap") {
      svg = renderHeatmap(readSweepCsv(args.input));
    } else if (args.command === "plot-trajectories") {
      const runs = args.input.split(",").map((p) => readTrajectoryCsv(p.trim()));
      svg = renderTrajectories(runs);
    } else {
      console.error(`qdpump-figures: unknown command '${args.command}'`);
      return 1;
    }
    writeFileSync(args.output, svg);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`qdpump-figures: refused: ${err.message}`);
      return 1;
    }
    console.error(`qdpump-figures: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].replace(/.*\//, ""));
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
