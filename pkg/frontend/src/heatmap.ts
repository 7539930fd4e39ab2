/**
 * Heatmap of the right-bath temperature change rate over (dT, dmu).
 *
 * The diverging colormap is centered at zero so the cooling region stands
 * out, and the zero level set is drawn as a contour via marching squares on
 * the cell-center grid.  Missing (NaN) cells render as hatched gaps.
 */

import { SweepData } from "./csv.js";
import { divergingColor, normalizer } from "./colormap.js";
import { axes, document as svgDocument, el, linearScale } from "./svg.js";

export interface HeatmapOptions {
  width?: number;
  height?: number;
  warn?: (message: string) => void;
}

interface Segment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

/** Zero-level segments from marching squares over grid cells. */
export function zeroContourSegments(
  xs: number[],
  ys: number[],
  values: number[][],
): Segment[] {
  const segments: Segment[] = [];
  const interp = (a: number, b: number, va: number, vb: number) =>
    a + ((0 - va) / (vb - va)) * (b - a);
  for (let i = 0; i + 1 < xs.length; i++) {
    for (let j = 0; j + 1 < ys.length; j++) {
      const v00 = values[i][j];
      const v10 = values[i + 1][j];
      const v01 = values[i][j + 1];
      const v11 = values[i + 1][j + 1];
      if (![v00, v10, v01, v11].every(Number.isFinite)) continue;
      const crossings: [number, number][] = [];
      if (v00 * v10 < 0) crossings.push([interp(xs[i], xs[i + 1], v00, v10), ys[j]]);
      if (v01 * v11 < 0) crossings.push([interp(xs[i], xs[i + 1], v01, v11), ys[j + 1]]);
      if (v00 * v01 < 0) crossings.push([xs[i], interp(ys[j], ys[j + 1], v00, v01)]);
      if (v10 * v11 < 0) crossings.push([xs[i + 1], interp(ys[j], ys[j + 1], v10, v11)]);
      if (crossings.length === 2) {
        segments.push({
          x1: crossings[0][0], y1: crossings[0][1],
          x2: crossings[1][0], y2: crossings[1][1],
        });
      } else if (crossings.length === 4) {
        // saddle: pair edges deterministically
        segments.push({ x1: crossings[0][0], y1: crossings[0][1],
                        x2: crossings[2][0], y2: crossings[2][1] });
        segments.push({ x1: crossings[1][0], y1: crossings[1][1],
                        x2: crossings[3][0], y2: crossings[3][1] });
      }
    }
  }
  return segments;
}

export function renderHeatmap(data: SweepData, options: HeatmapOptions = {}): string {
  const width = options.width ?? 640;
  const height = options.height ?? 480;
  const warn = options.warn ?? ((m: string) => console.warn(m));
  const margin = { left: 70, right: 110, top: 30, bottom: 50 };

  const { dT, dmu, values } = data;
  const flat = values.flat();
  const missing = flat.filter((v) => !Number.isFinite(v)).length;
  if (missing > 0) {
    warn(`${missing} missing cell(s) rendered as gaps`);
  }
  const norm = normalizer(flat);

  const stepX = dmu.length > 1 ? dmu[1] - dmu[0] : 1;
  const stepY = dT.length > 1 ? dT[1] - dT[0] : 1;
  const x = linearScale(
    [dmu[0] - stepX / 2, dmu[dmu.length - 1] + stepX / 2],
    [margin.left, width - margin.right],
  );
  const y = linearScale(
    [dT[0] - stepY / 2, dT[dT.length - 1] + stepY / 2],
    [height - margin.bottom, margin.top],
  );

  const cells: string[] = [];
  for (let i = 0; i < dT.length; i++) {
    for (let j = 0; j < dmu.length; j++) {
      const v = values[i][j];
      const px = x(dmu[j] - stepX / 2);
      const py = y(dT[i] + stepY / 2);
      const attrs = {
        x: px.toFixed(2),
        y: py.toFixed(2),
        width: Math.abs(x(stepX) - x(0)).toFixed(2),
        height: Math.abs(y(0) - y(stepY)).toFixed(2),
      };
      if (Number.isFinite(v)) {
        cells.push(el("rect", { ...attrs, fill: divergingColor(norm(v)) }));
      } else {
        cells.push(el("rect", { ...attrs, fill: "#bbbbbb", class: "missing-cell" }));
      }
    }
  }

  const segments = zeroContourSegments(dT, dmu, values);
  const contour: string[] = [];
  if (segments.length === 0) {
    warn("no zero contour: the rate does not change sign on this grid");
  } else {
    for (const s of segments) {
      contour.push(el("line", {
        x1: x(s.y1).toFixed(2), y1: y(s.x1).toFixed(2),
        x2: x(s.y2).toFixed(2), y2: y(s.x2).toFixed(2),
        stroke: "black", "stroke-width": 1.6, class: "zero-contour",
      }));
    }
  }

  const bar = colorbar(width - margin.right + 25, margin.top,
                       18, height - margin.top - margin.bottom, flat);
  const title = el("text", { x: margin.left, y: 18, "font-size": 14 }, [],
                   "right-bath temperature rate dT_R/dt [J0/tau]");
  return svgDocument(width, height, [
    ...cells,
    ...contour,
    axes(x, y, "dmu [J0]", "dT [J0]"),
    bar,
    title,
  ]);
}

function colorbar(x0: number, y0: number, w: number, h: number,
                  values: number[]): string {
  let peak = 0;
  for (const v of values) if (Number.isFinite(v)) peak = Math.max(peak, Math.abs(v));
  const steps = 64;
  const parts: string[] = [];
  for (let k = 0; k < steps; k++) {
    const frac = 1 - (2 * k) / (steps - 1);           // +1 at top, -1 at bottom
    parts.push(el("rect", {
      x: x0, y: (y0 + (k * h) / steps).toFixed(2),
      width: w, height: (h / steps + 0.5).toFixed(2),
      fill: divergingColor(frac),
    }));
  }
  for (const [frac, label] of [[1, peak], [0.5, peak / 2], [0, 0],
                               [-0.5, -peak / 2], [-1, -peak]] as const) {
    const py = y0 + ((1 - frac) / 2) * h;
    parts.push(el("text", { x: x0 + w + 6, y: py + 4, "font-size": 10 }, [],
                  label === 0 ? "0" : label.toExponential(1)));
  }
  return parts.join("");
}
