import type { ActivityBundle } from "./types";

export type SeriesKey = "hr" | "pace" | "hre" | "grade" | "breathing";
export type AxisMode = "time" | "distance";

export const SERIES_KEYS: readonly SeriesKey[] = ["hr", "pace", "hre", "grade", "breathing"];
export const DEFAULT_WINDOW = 30;

// activities longer than this default to a distance axis
const LONG_ACTIVITY_S = 90 * 60;

export interface ViewState {
  loaded: string[];
  visible: SeriesKey[];
  axisMode: AxisMode;
  zoom: [number, number] | null;
  window: number;
  cursor: number | null;
}

export function initialState(): ViewState {
  return {
    loaded: [],
    visible: ["hr", "pace", "hre"],
    axisMode: "time",
    zoom: null,
    window: DEFAULT_WINDOW,
    cursor: null,
  };
}

export function hasDistance(bundle: ActivityBundle): boolean {
  return bundle.samples.distance.some((d) => d !== null);
}

export function hasGps(bundle: ActivityBundle): boolean {
  const s = bundle.samples;
  return s.lat.some((v, i) => v !== null && s.lon[i] !== null);
}

export function defaultAxisMode(bundle: ActivityBundle): AxisMode {
  const t = bundle.samples.t;
  const span = t.length > 1 ? t[t.length - 1]! - t[0]! : 0;
  const duration = bundle.summary.moving_time ?? span;
  return duration > LONG_ACTIVITY_S && hasDistance(bundle) ? "distance" : "time";
}

export function loadOne(state: ViewState, bundle: ActivityBundle): ViewState {
  return {
    ...state,
    loaded: [bundle.id],
    axisMode: defaultAxisMode(bundle),
    zoom: null,
    cursor: null,
  };
}

export type OverlayPlan =
  | { kind: "empty" }
  | { kind: "single"; id: string }
  | { kind: "ok"; mode: AxisMode }
  | { kind: "prompt"; options: AxisMode[] };

export function planOverlay(bundles: ActivityBundle[]): OverlayPlan {
  if (bundles.length === 0) return { kind: "empty" };
  if (bundles.length === 1) return { kind: "single", id: bundles[0]!.id };
  const modes = new Set(bundles.map(defaultAxisMode));
  if (modes.size === 1) return { kind: "ok", mode: modes.values().next().value! };
  // default modes disagree; offer every mode all bundles support
  const options: AxisMode[] = bundles.every(hasDistance) ? ["time", "distance"] : ["time"];
  return { kind: "prompt", options };
}

export function applyOverlay(state: ViewState, ids: string[], mode: AxisMode): ViewState {
  return { ...state, loaded: [...ids], axisMode: mode, zoom: null, cursor: null };
}

export function toggleSeries(state: ViewState, key: SeriesKey): ViewState {
  // canonical ordering keeps off-then-on an exact round trip
  const visible = state.visible.includes(key)
    ? state.visible.filter((k) => k !== key)
    : SERIES_KEYS.filter((k) => state.visible.includes(k) || k === key);
  return { ...state, visible };
}

export function setAxisMode(state: ViewState, mode: AxisMode): ViewState {
  if (mode === state.axisMode) return state;
  return { ...state, axisMode: mode, zoom: null, cursor: null };
}

function clamp(x: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, x));
}

export function setZoom(state: ViewState, range: [number, number] | null): ViewState {
  if (range === null) return { ...state, zoom: null };
  const lo = Math.min(range[0], range[1]);
  const hi = Math.max(range[0], range[1]);
  if (!(lo < hi)) return state;
  const cursor = state.cursor === null ? null : clamp(state.cursor, lo, hi);
  return { ...state, zoom: [lo, hi], cursor };
}

export function setCursor(state: ViewState, x: number | null): ViewState {
  if (x === null) return { ...state, cursor: null };
  const cursor = state.zoom === null ? x : clamp(x, state.zoom[0], state.zoom[1]);
  return { ...state, cursor };
}

export function setWindow(state: ViewState, seconds: number): ViewState {
  if (!(seconds > 0) || !Number.isFinite(seconds)) return state;
  return { ...state, window: seconds };
}
