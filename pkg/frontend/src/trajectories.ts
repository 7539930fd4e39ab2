/**
 * Bath-temperature trajectories: left bath solid, right bath dashed, one hue
 * per run, temperatures normalized by the common initial temperature T0 and
 * time in units of tau.
 */

import { TrajectoryData } from "./csv.js";
import { SchemaError } from "./csv.js";
import { axes, document as svgDocument, el, linearScale } from "./svg.js";

export interface TrajectoryOptions {
  width?: number;
  height?: number;
}

const HUES = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
              "#8c564b", "#17becf", "#7f7f7f"];

export function renderTrajectories(
  runs: TrajectoryData[],
  options: TrajectoryOptions = {},
): string {
  if (runs.length === 0) throw new SchemaError("no trajectory inputs");
  const width = options.width ?? 640;
  const height = options.height ?? 440;
  const margin = { left: 70, right: 160, top: 30, bottom: 50 };

  const t0 = runs[0].tempRight[0];
  for (const run of runs) {
    const own = run.tempRight[0];
    if (Math.abs(own - t0) > 1e-9 * Math.max(Math.abs(t0), 1)) {
      throw new SchemaError(
        `inconsistent initial temperature T0 across inputs: ` +
          `${run.label} starts at ${own}, expected ${t0}`,
      );
    }
  }

  let tMax = 0;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const run of runs) {
    tMax = Math.max(tMax, run.t[run.t.length - 1]);
    for (const series of [run.tempLeft, run.tempRight]) {
      for (const v of series) {
        yMin = Math.min(yMin, v / t0);
        yMax = Math.max(yMax, v / t0);
      }
    }
  }
  const pad = 0.05 * (yMax - yMin || 1);
  const x = linearScale([0, tMax], [margin.left, width - margin.right]);
  const y = linearScale([yMin - pad, yMax + pad],
                        [height - margin.bottom, margin.top]);

  const parts: string[] = [];
  const legend: string[] = [];
  runs.forEach((run, k) => {
    const hue = HUES[k % HUES.length];
    const path = (series: number[]) =>
      series.map((v, i) =>
        `${i === 0 ? "M" : "L"}${x(run.t[i]).toFixed(2)},${y(v / t0).toFixed(2)}`,
      ).join("");
    parts.push(el("path", {
      d: path(run.tempLeft), fill: "none", stroke: hue,
      "stroke-width": 1.6, class: "temp-left",
    }));
    parts.push(el("path", {
      d: path(run.tempRight), fill: "none", stroke: hue,
      "stroke-width": 1.6, "stroke-dasharray": "6,4", class: "temp-right",
    }));
    // mark the right-bath minimum
    let iMin = 0;
    run.tempRight.forEach((v, i) => { if (v < run.tempRight[iMin]) iMin = i; });
    parts.push(el("circle", {
      cx: x(run.t[iMin]).toFixed(2), cy: y(run.tempRight[iMin] / t0).toFixed(2),
      r: 3, fill: hue, class: "right-minimum",
    }));
    const ly = margin.top + 16 * k;
    legend.push(el("line", { x1: width - margin.right + 10, y1: ly,
                             x2: width - margin.right + 34, y2: ly,
                             stroke: hue, "stroke-width": 1.6 }));
    legend.push(el("text", { x: width - margin.right + 40, y: ly + 4,
                             "font-size": 11 }, [], run.label));
  });
  legend.push(el("text", { x: width - margin.right + 10,
                           y: margin.top + 16 * runs.length + 10,
                           "font-size": 10, fill: "#444" }, [],
                 "solid: T_L, dashed: T_R"));

  const unity = el("line", {
    x1: x.range[0], y1: y(1).toFixed(2), x2: x.range[1], y2: y(1).toFixed(2),
    stroke: "#999", "stroke-width": 0.8, "stroke-dasharray": "2,3",
  });

  return svgDocument(width, height, [
    unity,
    ...parts,
    ...legend,
    axes(x, y, "t [tau]", "T / T0"),
  ]);
}
