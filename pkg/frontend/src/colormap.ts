/**
 * Diverging blue-white-red map centered at zero, for signed rate heatmaps:
 * cooling (negative) renders blue, heating (positive) red.
 */

export type Rgb = [number, number, number];

const NEGATIVE_END: Rgb = [5, 48, 97];
const CENTER: Rgb = [247, 247, 247];
const POSITIVE_END: Rgb = [103, 0, 31];

function mix(a: Rgb, b: Rgb, t: number): Rgb {
  return [
    Math.round(a[0] + (b[0] - a[0]) * t),
    Math.round(a[1] + (b[1] - a[1]) * t),
    Math.round(a[2] + (b[2] - a[2]) * t),
  ];
}

/** value in [-1, 1] (clamped) to an rgb() string; 0 maps to the center. */
export function divergingColor(value: number): string {
  const v = Math.max(-1, Math.min(1, value));
  const rgb = v < 0 ? mix(CENTER, NEGATIVE_END, -v) : mix(CENTER, POSITIVE_END, v);
  return `rgb(${rgb[0]},${rgb[1]},${rgb[2]})`;
}

/** Symmetric normalization: the largest |value| maps to the ends. */
export function normalizer(values: number[]): (v: number) => number {
  let peak = 0;
  for (const v of values) {
    if (Number.isFinite(v)) peak = Math.max(peak, Math.abs(v));
  }
  if (peak === 0) return () => 0;
  return (v) => v / peak;
}
