/** Minimal SVG document assembly: elements, linear scales and axes. */

export function el(
  tag: string,
  attrs: Record<string, string | number>,
  children: string[] = [],
  text?: string,
): string {
  const body = text ?? children.join("");
  const attrText = Object.entries(attrs)
    .map(([k, v]) => `${k}="${v}"`)
    .join(" ");
  return body === ""
    ? `<${tag} ${attrText}/>`
    : `<${tag} ${attrText}>${body}</${tag}>`;
}

export interface Scale {
  (x: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const f = ((x: number) => r0 + ((x - d0) / span) * (r1 - r0)) as Scale;
  f.domain = domain;
  f.range = range;
  return f;
}

export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  if (lo === hi) return [lo];
  const step = niceStep((hi - lo) / count);
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + 1e-9 * step; v += step) {
    out.push(Math.abs(v) < 1e-12 * step ? 0 : Number(v.toPrecision(12)));
  }
  return out;
}

function niceStep(raw: number): number {
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const frac = raw / mag;
  if (frac <= 1) return mag;
  if (frac <= 2) return 2 * mag;
  if (frac <= 5) return 5 * mag;
  return 10 * mag;
}

export function axes(
  x: Scale,
  y: Scale,
  xLabel: string,
  yLabel: string,
): string {
  const parts: string[] = [];
  const [x0, x1] = x.range;
  const [yTop, yBottom] = [Math.min(...y.range), Math.max(...y.range)];
  parts.push(el("line", { x1: x0, y1: yBottom, x2: x1, y2: yBottom,
                          stroke: "black", "stroke-width": 1 }));
  parts.push(el("line", { x1: x0, y1: yTop, x2: x0, y2: yBottom,
                          stroke: "black", "stroke-width": 1 }));
  for (const t of ticks(x.domain)) {
    const px = x(t);
    parts.push(el("line", { x1: px, y1: yBottom, x2: px, y2: yBottom + 5,
                            stroke: "black", "stroke-width": 1 }));
    parts.push(el("text", { x: px, y: yBottom + 18, "text-anchor": "middle",
                            "font-size": 11 }, [], formatTick(t)));
  }
  for (const t of ticks(y.domain)) {
    const py = y(t);
    parts.push(el("line", { x1: x0 - 5, y1: py, x2: x0, y2: py,
                            stroke: "black", "stroke-width": 1 }));
    parts.push(el("text", { x: x0 - 8, y: py + 4, "text-anchor": "end",
                            "font-size": 11 }, [], formatTick(t)));
  }
  const xMid = (x0 + x1) / 2;
  const yMid = (yTop + yBottom) / 2;
  parts.push(el("text", { x: xMid, y: yBottom + 36, "text-anchor": "middle",
                          "font-size": 13 }, [], xLabel));
  parts.push(el("text", {
    x: x0 - 42, y: yMid, "text-anchor": "middle", "font-size": 13,
    transform: `rotate(-90 ${x0 - 42} ${yMid})`,
  }, [], yLabel));
  return parts.join("");
}

function formatTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1000 || a < 0.01) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}

export function document(width: number, height: number, children: string[]): string {
  return (
    `<?xml version="1.0" encoding="UTF-8"?>\n` +
    el("svg", {
      xmlns: "http://www.w3.org/2000/svg",
      width,
      height,
      viewBox: `0 0 ${width} ${height}`,
      "font-family": "sans-serif",
    }, [el("rect", { x: 0, y: 0, width, height, fill: "white" }), ...children]) +
    "\n"
  );
}
