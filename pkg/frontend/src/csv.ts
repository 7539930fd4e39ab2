/**
 * CSV ingestion for the simulator's documented output schemas.
 *
 * Files start with an optional '# key = value' comment block followed by an
 * exact header line; anything that does not match one of the two schemas is
 * refused rather than guessed at.
 */

import { readFileSync } from "fs";

export const SWEEP_COLUMNS = ["dT", "dmu", "dTR_dt"] as const;
export const TRAJECTORY_COLUMNS = [
  "t_tau",
  "T_L",
  "mu_L",
  "T_R",
  "mu_R",
  "dTR_dt",
] as const;

export class SchemaError extends Error {}

export interface ParsedCsv {
  header: string[];
  rows: number[][];
  meta: Map<string, string>;
}

export function parseCsvText(text: string, path = "<string>"): ParsedCsv {
  const meta = new Map<string, string>();
  const lines = text.split(/\r?\n/);
  let header: string[] | null = null;
  const rows: number[][] = [];
  for (const [index, raw] of lines.entries()) {
    const line = raw.trim();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const m = line.slice(1).match(/^\s*([^=]+?)\s*=\s*(.*)$/);
      if (m) meta.set(m[1], m[2]);
      continue;
    }
    if (header === null) {
      header = line.split(",").map((c) => c.trim());
      continue;
    }
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new SchemaError(
        `${path}:${index + 1}: expected ${header.length} columns, got ${cells.length}`,
      );
    }
    const values = cells.map((c) => Number(c));
    for (const [j, v] of values.entries()) {
      if (Number.isNaN(v) && cells[j].trim().toLowerCase() !== "nan") {
        throw new SchemaError(`${path}:${index + 1}: non-numeric cell '${cells[j]}'`);
      }
    }
    rows.push(values);
  }
  if (header === null) {
    throw new SchemaError(`${path}: no header line found`);
  }
  return { header, rows, meta };
}

function requireColumns(parsed: ParsedCsv, expected: readonly string[], path: string): void {
  const got = parsed.header.join(",");
  const want = expected.join(",");
  if (got !== want) {
    throw new SchemaError(`${path}: header '${got}' does not match schema '${want}'`);
  }
}

export interface SweepData {
  dT: number[];
  dmu: number[];
  /** values[i][j] for dT[i], dmu[j]; NaN marks a missing cell */
  values: number[][];
  meta: Map<string, string>;
}

export function readSweepCsv(path: string): SweepData {
  const parsed = parseCsvText(readFileSync(path, "utf8"), path);
  requireColumns(parsed, SWEEP_COLUMNS, path);
  if (parsed.rows.length === 0) throw new SchemaError(`${path}: no data rows`);
  const dT = [...new Set(parsed.rows.map((r) => r[0]))].sort((a, b) => a - b);
  const dmu = [...new Set(parsed.rows.map((r) => r[1]))].sort((a, b) => a - b);
  if (dT.length * dmu.length !== parsed.rows.length) {
    throw new SchemaError(
      `${path}: ${parsed.rows.length} rows do not fill the ` +
        `${dT.length} x ${dmu.length} grid`,
    );
  }
  const iOf = new Map(dT.map((v, i) => [v, i]));
  const jOf = new Map(dmu.map((v, j) => [v, j]));
  const values = dT.map(() => dmu.map(() => NaN));
  for (const [t, m, v] of parsed.rows) {
    values[iOf.get(t)!][jOf.get(m)!] = v;
  }
  return { dT, dmu, values, meta: parsed.meta };
}

export interface TrajectoryData {
  label: string;
  t: number[];
  tempLeft: number[];
  muLeft: number[];
  tempRight: number[];
  muRight: number[];
  meta: Map<string, string>;
}

export function readTrajectoryCsv(path: string): TrajectoryData {
  const parsed = parseCsvText(readFileSync(path, "utf8"), path);
  requireColumns(parsed, TRAJECTORY_COLUMNS, path);
  if (parsed.rows.length < 2) throw new SchemaError(`${path}: needs at least two samples`);
  const col = (k: number) => parsed.rows.map((r) => r[k]);
  const label =
    parsed.meta.get("label") ?? path.replace(/.*\//, "").replace(/\.csv$/, "");
  return {
    label,
    t: col(0),
    tempLeft: col(1),
    muLeft: col(2),
    tempRight: col(3),
    muRight: col(4),
    meta: parsed.meta,
  };
}
