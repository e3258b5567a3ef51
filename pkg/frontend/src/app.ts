import "leaflet/dist/leaflet.css";
import "./style.css";

import { Api, ApiError } from "./api";
import { LineChart } from "./chart";
import { DEFAULT_TILE_TEMPLATE, MapView, type MapTrack } from "./mapview";
import { formatDuration, renderLapTable, renderLegend, renderReadout, renderSummaryCard } from "./panels";
import {
  cursorSample,
  gpsTrack,
  lapZoomRange,
  overlayTraces,
  singleTraces,
  xValues,
  type Trace,
} from "./series";
import {
  applyOverlay,
  hasDistance,
  hasGps,
  initialState,
  loadOne,
  planOverlay,
  setAxisMode,
  setCursor,
  setWindow,
  setZoom,
  toggleSeries,
  SERIES_KEYS,
  type AxisMode,
  type SeriesKey,
  type ViewState,
} from "./state";
import { renderTrend } from "./trend";
import type { ActivityBundle, ActivityListRow, BreathingSeries } from "./types";

const api = new Api();
const urlParams = new URLSearchParams(window.location.search);
const tileTemplate = urlParams.get("tiles") ?? DEFAULT_TILE_TEMPLATE;

let state: ViewState = initialState();
const bundleCache = new Map<string, { window: number; bundle: ActivityBundle }>();
const breathingCache = new Map<string, BreathingSeries | null>();
let listRows: ActivityListRow[] = [];
let traces: Trace[] = [];

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const bannerEl = byId<HTMLDivElement>("banner");
const listEl = byId<HTMLUListElement>("activity-list");
const emptyEl = byId<HTMLDivElement>("empty");
const viewerEl = byId<HTMLDivElement>("viewer");
const togglesEl = byId<HTMLSpanElement>("series-toggles");
const axisEl = byId<HTMLSpanElement>("axis-modes");
const windowInput = byId<HTMLInputElement>("window-input");
const windowLabel = byId<HTMLSpanElement>("window-label");
const chartCanvas = byId<HTMLCanvasElement>("chart");
const legendEl = byId<HTMLDivElement>("legend");
const readoutEl = byId<HTMLDivElement>("readout");
const summaryEl = byId<HTMLDivElement>("summary");
const lapsEl = byId<HTMLDivElement>("laps");
const trendCanvas = byId<HTMLCanvasElement>("trend");

function showError(message: string): void {
  bannerEl.className = "banner error";
  bannerEl.textContent = "";
  bannerEl.appendChild(document.createTextNode(message));
  const close = document.createElement("button");
  close.textContent = "dismiss";
  close.addEventListener("click", hideBanner);
  bannerEl.appendChild(close);
}

function showPrompt(message: string, options: { label: string; run: () => void }[]): void {
  bannerEl.className = "banner prompt";
  bannerEl.textContent = "";
  bannerEl.appendChild(document.createTextNode(message));
  for (const option of options) {
    const button = document.createElement("button");
    button.textContent = option.label;
    button.addEventListener("click", () => {
      hideBanner();
      option.run();
    });
    bannerEl.appendChild(button);
  }
  const close = document.createElement("button");
  close.textContent = "cancel";
  close.addEventListener("click", hideBanner);
  bannerEl.appendChild(close);
}

function hideBanner(): void {
  bannerEl.className = "banner hidden";
  bannerEl.textContent = "";
}

function describeError(e: unknown): string {
  if (e instanceof ApiError) return e.status === 0 ? e.detail : `service error ${e.status}: ${e.detail}`;
  return String(e);
}

async function fetchBundle(id: string): Promise<ActivityBundle> {
  const cached = bundleCache.get(id);
  if (cached && cached.window === state.window) return cached.bundle;
  const bundle = await api.bundle(id, state.window);
  bundleCache.set(id, { window: state.window, bundle });
  return bundle;
}

function loadedBundles(): ActivityBundle[] {
  const out: ActivityBundle[] = [];
  for (const id of state.loaded) {
    const entry = bundleCache.get(id);
    if (entry) out.push(entry.bundle);
  }
  return out;
}

async function ensureBreathing(bundle: ActivityBundle): Promise<void> {
  if (!bundle.has_rr || breathingCache.has(bundle.id)) return;
  try {
    breathingCache.set(bundle.id, await api.breathing(bundle.id));
  } catch (e) {
    breathingCache.set(bundle.id, null);
    showError(describeError(e));
  }
}

const chart = new LineChart(chartCanvas, {
  onCursor(x) {
    state = setCursor(state, x);
    renderCursor();
  },
  onZoom(range) {
    state = setZoom(state, range);
    renderChartOnly();
  },
});

const map = new MapView(byId<HTMLDivElement>("map"), tileTemplate, (trackIdx, sampleIdx) => {
  const bundles = loadedBundles();
  const bundle = bundles[trackIdx];
  if (!bundle) return;
  const xs = xValues(bundle, state.axisMode);
  const x = xs[sampleIdx];
  if (x === null || x === undefined) return;
  state = setCursor(state, x);
  renderCursor();
});

function rebuildTraces(): void {
  const bundles = loadedBundles();
  if (bundles.length === 0) {
    traces = [];
    return;
  }
  if (bundles.length > 1) {
    traces = overlayTraces(bundles, state);
    return;
  }
  const bundle = bundles[0]!;
  const breathing = breathingCache.get(bundle.id) ?? null;
  traces = singleTraces(bundle, state, breathing);
}

function formatX(x: number): string {
  return state.axisMode === "time" ? formatDuration(x) : `${x.toFixed(2)} km`;
}

function renderChartOnly(): void {
  chart.setFormatX(formatX);
  chart.render(traces, state.zoom, state.cursor);
  renderReadoutPanel();
}

function renderReadoutPanel(): void {
  readoutEl.textContent = "";
  readoutEl.appendChild(renderReadout(traces, state.cursor));
}

function renderCursor(): void {
  chart.render(traces, state.zoom, state.cursor);
  renderReadoutPanel();
  const bundles = loadedBundles();
  const target = bundles.find(hasGps);
  if (!target || state.cursor === null) {
    map.clearMarker();
    return;
  }
  const sample = cursorSample(target, state.axisMode, state.cursor);
  if (sample && sample.lat !== null && sample.lon !== null) {
    map.setMarker(sample.lat, sample.lon);
  } else {
    map.clearMarker();
  }
}

function renderToolbar(): void {
  const bundles = loadedBundles();
  const overlayMode = bundles.length > 1;
  togglesEl.textContent = "";
  for (const key of SERIES_KEYS) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = state.visible.includes(key);
    box.dataset.series = key;
    if (overlayMode && key !== "hre") {
      box.disabled = true;
      label.title = "overlay compares HRE across activities";
    }
    if (!overlayMode && key === "breathing" && bundles[0] && !bundles[0].has_rr) {
      box.disabled = true;
      label.title = "no RR data in this activity";
    }
    box.addEventListener("change", () => onToggleSeries(key));
    label.appendChild(box);
    label.appendChild(document.createTextNode(key));
    togglesEl.appendChild(label);
  }

  axisEl.textContent = "";
  const distanceOk = bundles.length > 0 && bundles.every(hasDistance);
  for (const mode of ["time", "distance"] as AxisMode[]) {
    const label = document.createElement("label");
    const radio = document.createElement("input");
    radio.type = "radio";
    radio.name = "axis-mode";
    radio.value = mode;
    radio.checked = state.axisMode === mode;
    if (mode === "distance" && !distanceOk) {
      radio.disabled = true;
      label.title = "no distance data";
    }
    radio.addEventListener("change", () => {
      state = setAxisMode(state, mode);
      renderStructure();
    });
    label.appendChild(radio);
    label.appendChild(document.createTextNode(mode));
    axisEl.appendChild(label);
  }

  windowInput.value = String(state.window);
  windowLabel.textContent = `${state.window} s`;
}

function renderStructure(): void {
  const bundles = loadedBundles();
  if (bundles.length === 0) {
    emptyEl.classList.remove("hidden");
    viewerEl.classList.add("hidden");
    return;
  }
  emptyEl.classList.add("hidden");
  viewerEl.classList.remove("hidden");

  rebuildTraces();
  renderToolbar();
  renderChartOnly();

  legendEl.textContent = "";
  legendEl.appendChild(renderLegend(traces));

  summaryEl.textContent = "";
  lapsEl.textContent = "";
  if (bundles.length === 1) {
    const bundle = bundles[0]!;
    summaryEl.appendChild(renderSummaryCard(bundle));
    lapsEl.appendChild(
      renderLapTable(bundle.laps, (lapIdx) => {
        const lap = bundle.laps[lapIdx];
        if (!lap) return;
        const range = lapZoomRange(bundle, lap, state.axisMode);
        if (range) {
          state = setZoom(state, range);
          renderChartOnly();
        }
      }),
    );
  }

  const mapTracks: MapTrack[] = [];
  traces.forEach((trace, i) => {
    if (i > 0 && traces[i - 1]!.id === trace.id) return;
    const bundle = bundles.find((b) => b.id === trace.id);
    if (!bundle) return;
    const track = gpsTrack(bundle);
    if (track.points.length > 0) mapTracks.push({ ...track, color: trace.color });
  });
  if (bundles.length === 1 && mapTracks.length === 0 && hasGps(bundles[0]!)) {
    // single mode with no visible trace still shows the track
    mapTracks.push({ ...gpsTrack(bundles[0]!), color: "#1f77b4" });
  }
  if (mapTracks.length > 0) {
    map.setTracks(mapTracks);
    map.setDisabled(null);
  } else {
    map.setTracks([]);
    map.setDisabled("no GPS data in the loaded activities");
  }
  renderCursor();
}

function onToggleSeries(key: SeriesKey): void {
  state = toggleSeries(state, key);
  const bundles = loadedBundles();
  if (key === "breathing" && state.visible.includes(key) && bundles.length === 1 && bundles[0]) {
    void ensureBreathing(bundles[0]).then(renderStructure);
    return;
  }
  renderStructure();
}

async function loadSingle(id: string): Promise<void> {
  hideBanner();
  try {
    const bundle = await fetchBundle(id);
    state = loadOne(state, bundle);
    if (state.visible.includes("breathing")) await ensureBreathing(bundle);
    renderStructure();
  } catch (e) {
    showError(describeError(e));
  }
}

async function overlayFlow(ids: string[]): Promise<void> {
  hideBanner();
  if (ids.length === 0) {
    state = { ...state, loaded: [], zoom: null, cursor: null };
    renderStructure();
    showError("select at least one activity to view");
    return;
  }
  if (ids.length === 1) {
    await loadSingle(ids[0]!);
    return;
  }
  try {
    const bundles = await Promise.all(ids.map(fetchBundle));
    const plan = planOverlay(bundles);
    if (plan.kind === "ok") {
      state = applyOverlay(state, ids, plan.mode);
      renderStructure();
    } else if (plan.kind === "prompt") {
      showPrompt(
        "These activities default to different x axes; pick one for the overlay:",
        plan.options.map((mode) => ({
          label: `use ${mode}`,
          run: () => {
            state = applyOverlay(state, ids, mode);
            renderStructure();
          },
        })),
      );
    }
  } catch (e) {
    showError(describeError(e));
  }
}

function renderList(): void {
  listEl.textContent = "";
  for (const row of listRows) {
    const li = document.createElement("li");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.dataset.overlayId = row.id;
    li.appendChild(box);
    const button = document.createElement("button");
    button.className = "activity-button";
    const date = row.start_time.slice(0, 10);
    const km = row.distance_km === null ? "-" : `${row.distance_km.toFixed(1)} km`;
    button.textContent = `${date} ${row.sport} ${km}`;
    button.addEventListener("click", () => void loadSingle(row.id));
    li.appendChild(button);
    if (row.band) li.appendChild(Object.assign(document.createElement("span"), {
      className: `badge band-${row.band}`,
      textContent: row.band,
    }));
    listEl.appendChild(li);
  }
}

async function refetchLoaded(): Promise<void> {
  try {
    await Promise.all(state.loaded.map(fetchBundle));
    renderStructure();
  } catch (e) {
    showError(describeError(e));
  }
}

function wireToolbar(): void {
  let timer: ReturnType<typeof setTimeout> | null = null;
  windowInput.addEventListener("input", () => {
    const value = Number(windowInput.value);
    state = setWindow(state, value);
    windowLabel.textContent = `${state.window} s`;
    if (timer) clearTimeout(timer);
    // server recomputes the series; debounce slider drags
    timer = setTimeout(() => void refetchLoaded(), 250);
  });
  byId<HTMLButtonElement>("reset-zoom").addEventListener("click", () => {
    state = setZoom(state, null);
    renderChartOnly();
  });
  byId<HTMLButtonElement>("overlay-btn").addEventListener("click", () => {
    const ids = Array.from(listEl.querySelectorAll<HTMLInputElement>("input[data-overlay-id]"))
      .filter((box) => box.checked)
      .map((box) => box.dataset.overlayId!);
    void overlayFlow(ids);
  });
  byId<HTMLButtonElement>("clear-btn").addEventListener("click", () => {
    state = { ...state, loaded: [], zoom: null, cursor: null };
    renderStructure();
  });
}

function sizeChart(): void {
  const holder = chartCanvas.parentElement;
  if (!holder) return;
  const width = Math.max(320, holder.clientWidth - 2);
  if (chartCanvas.width !== width) {
    chartCanvas.width = width;
    renderChartOnly();
  }
}

async function start(): Promise<void> {
  wireToolbar();
  renderStructure();
  window.addEventListener("resize", sizeChart);
  sizeChart();
  try {
    listRows = await api.listActivities();
    renderList();
  } catch (e) {
    showError(describeError(e));
  }
  try {
    renderTrend(trendCanvas, await api.rollup("monthly"));
  } catch {
    // trend panel is best-effort; the list error banner already covers outage
  }
}

void start();
