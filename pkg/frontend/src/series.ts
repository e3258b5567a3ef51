// Pure selectors turning service payloads plus ViewState into drawable
// traces. Values pass through untouched; only the x coordinate is derived
// (seconds, or service-reported meters shown as km).

import type { AxisMode, SeriesKey, ViewState } from "./state";
import type { ActivityBundle, BreathingSeries, Lap } from "./types";

export interface Trace {
  id: string;
  key: SeriesKey;
  label: string;
  color: string;
  scale: string;
  xs: (number | null)[];
  vs: (number | null)[];
}

const SERIES_STYLE: Record<SeriesKey, { label: string; color: string }> = {
  hr: { label: "HR (bpm)", color: "#d62728" },
  pace: { label: "Pace (min/km)", color: "#1f77b4" },
  hre: { label: "HRE (beats/km)", color: "#9467bd" },
  grade: { label: "Grade", color: "#8c564b" },
  breathing: { label: "Breathing (breaths/min)", color: "#2ca02c" },
};

export const OVERLAY_PALETTE = [
  "#9467bd",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#1f77b4",
  "#8c564b",
  "#e377c2",
  "#17becf",
];

export function xValues(bundle: ActivityBundle, mode: AxisMode): (number | null)[] {
  if (mode === "time") return bundle.samples.t.slice();
  return bundle.samples.distance.map((d) => (d === null ? null : d / 1000));
}

/** Index of the non-null x nearest to x; null when every entry is null. */
export function nearestIndex(xs: (number | null)[], x: number): number | null {
  let lo = 0;
  let hi = xs.length - 1;
  let best: number | null = null;
  let bestDist = Infinity;
  const consider = (i: number) => {
    const v = xs[i];
    if (v === null || v === undefined) return;
    const d = Math.abs(v - x);
    if (d < bestDist) {
      bestDist = d;
      best = i;
    }
  };
  // binary search over an ascending array with null holes: probe the
  // midpoint, sliding off nulls, then narrow toward x
  while (lo <= hi) {
    let mid = (lo + hi) >> 1;
    let probe = mid;
    while (probe <= hi && xs[probe] === null) probe++;
    if (probe > hi) {
      hi = mid - 1;
      continue;
    }
    consider(probe);
    const v = xs[probe]!;
    if (v < x) lo = probe + 1;
    else hi = mid - 1;
  }
  // the neighbor on the low side can be closer than the insertion point
  for (let i = lo - 1; i >= 0; i--) {
    if (xs[i] !== null) {
      consider(i);
      break;
    }
  }
  for (let i = lo; i < xs.length; i++) {
    if (xs[i] !== null) {
      consider(i);
      break;
    }
  }
  return best;
}

export function breathingXs(
  bundle: ActivityBundle,
  breathing: BreathingSeries,
  mode: AxisMode,
): (number | null)[] {
  if (mode === "time") return breathing.t.slice();
  const ts = bundle.samples.t;
  const dist = bundle.samples.distance;
  return breathing.t.map((t) => {
    const i = nearestIndex(ts, t);
    if (i === null) return null;
    const d = dist[i];
    return d === null || d === undefined ? null : d / 1000;
  });
}

export function singleTraces(
  bundle: ActivityBundle,
  state: ViewState,
  breathing: BreathingSeries | null,
): Trace[] {
  const xs = xValues(bundle, state.axisMode);
  const traces: Trace[] = [];
  for (const key of state.visible) {
    const style = SERIES_STYLE[key];
    if (key === "breathing") {
      if (breathing === null) continue;
      traces.push({
        id: bundle.id,
        key,
        label: style.label,
        color: style.color,
        scale: key,
        xs: breathingXs(bundle, breathing, state.axisMode),
        vs: breathing.v.slice(),
      });
    } else {
      traces.push({
        id: bundle.id,
        key,
        label: style.label,
        color: style.color,
        scale: key,
        xs,
        vs: bundle.samples[key].slice(),
      });
    }
  }
  return traces;
}

/** Comparison view: one HRE trace per activity, distinct colors, shared scale. */
export function overlayTraces(bundles: ActivityBundle[], state: ViewState): Trace[] {
  return bundles.map((bundle, i) => ({
    id: bundle.id,
    key: "hre" as const,
    label: `${bundle.summary.date} ${bundle.id}`,
    color: OVERLAY_PALETTE[i % OVERLAY_PALETTE.length]!,
    scale: "hre",
    xs: xValues(bundle, state.axisMode),
    vs: bundle.samples.hre.slice(),
  }));
}

function scanForward(xs: (number | null)[], from: number): number | null {
  for (let i = Math.max(0, from); i < xs.length; i++) {
    const v = xs[i];
    if (v !== null && v !== undefined) return v;
  }
  return null;
}

function scanBackward(xs: (number | null)[], from: number): number | null {
  for (let i = Math.min(from, xs.length - 1); i >= 0; i--) {
    const v = xs[i];
    if (v !== null && v !== undefined) return v;
  }
  return null;
}

export function lapZoomRange(
  bundle: ActivityBundle,
  lap: Lap,
  mode: AxisMode,
): [number, number] | null {
  const xs = xValues(bundle, mode);
  if (xs.length === 0) return null;
  const start = scanForward(xs, lap.start_index);
  const end =
    lap.end_index < xs.length ? scanBackward(xs, lap.end_index) : scanBackward(xs, xs.length - 1);
  if (start === null || end === null || !(start < end)) return null;
  return [start, end];
}

export interface GpsTrack {
  points: [number, number][];
  indices: number[];
}

export function gpsTrack(bundle: ActivityBundle): GpsTrack {
  const { lat, lon } = bundle.samples;
  const points: [number, number][] = [];
  const indices: number[] = [];
  for (let i = 0; i < lat.length; i++) {
    const la = lat[i];
    const lo = lon[i];
    if (la !== null && la !== undefined && lo !== null && lo !== undefined) {
      points.push([la, lo]);
      indices.push(i);
    }
  }
  return { points, indices };
}

export interface CursorSample {
  index: number;
  x: number;
  lat: number | null;
  lon: number | null;
}

/** Sample under the chart cursor, for the linked map marker. */
export function cursorSample(
  bundle: ActivityBundle,
  mode: AxisMode,
  cursor: number,
): CursorSample | null {
  const xs = xValues(bundle, mode);
  const index = nearestIndex(xs, cursor);
  if (index === null) return null;
  return {
    index,
    x: xs[index]!,
    lat: bundle.samples.lat[index] ?? null,
    lon: bundle.samples.lon[index] ?? null,
  };
}
