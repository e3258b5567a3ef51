// DOM builders for the summary card, lap table, legend, and cursor readout.
// HRE, drift, and band values are rendered with String(value) so what is on
// screen is exactly what the service sent.

import { nearestIndex, type Trace } from "./series";
import type { ActivityBundle, Lap } from "./types";

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function formatPace(pace: number | null): string {
  if (pace === null) return "-";
  let minutes = Math.floor(pace);
  let seconds = Math.round((pace - minutes) * 60);
  if (seconds === 60) {
    minutes += 1;
    seconds = 0;
  }
  return `${minutes}:${String(seconds).padStart(2, "0")}`;
}

export function formatDuration(seconds: number | null): string {
  if (seconds === null) return "-";
  const s = Math.round(seconds);
  const h = Math.floor(s / 3600);
  const m = Math.floor((s % 3600) / 60);
  const r = s % 60;
  const mm = String(m).padStart(2, "0");
  const ss = String(r).padStart(2, "0");
  return h > 0 ? `${h}:${mm}:${ss}` : `${m}:${ss}`;
}

function row(target: HTMLElement, label: string, value: string, field?: string): void {
  const item = el("div", "card-row");
  item.appendChild(el("span", "card-label", label));
  const v = el("span", "card-value", value);
  if (field) v.dataset.field = field;
  item.appendChild(v);
  target.appendChild(item);
}

export function renderSummaryCard(bundle: ActivityBundle): HTMLElement {
  const card = el("section", "card summary-card");
  const head = el("header", "card-head");
  head.appendChild(el("strong", undefined, `${bundle.summary.date} ${bundle.sport}`));
  head.appendChild(el("span", "muted", bundle.summary.source));
  card.appendChild(head);

  const body = el("div", "card-body");
  const km = bundle.summary.distance_km;
  row(body, "Distance", km === null ? "-" : `${km.toFixed(2)} km`);
  row(body, "Moving time", formatDuration(bundle.summary.moving_time));
  row(body, "Avg pace", formatPace(bundle.summary.avg_pace));
  row(body, "Avg HR", bundle.summary.avg_hr === null ? "-" : bundle.summary.avg_hr.toFixed(0));
  row(body, "HRE", bundle.summary.hre === null ? "-" : String(bundle.summary.hre), "hre");
  card.appendChild(body);

  if (bundle.fitness) {
    const badge = el("span", `badge band-${bundle.fitness.band}`, bundle.fitness.band);
    badge.dataset.field = "band";
    const wrap = el("div", "card-row");
    wrap.appendChild(el("span", "card-label", "Band"));
    wrap.appendChild(badge);
    card.appendChild(wrap);
  }

  if (bundle.drift) {
    const drift = el("div", "card-body drift");
    row(drift, "Mean HRE", String(bundle.drift.mean_hre), "mean_hre");
    row(drift, "Drift %", String(bundle.drift.drift_pct), "drift_pct");
    row(
      drift,
      "Late degradation %",
      String(bundle.drift.late_degradation_pct),
      "late_degradation_pct",
    );
    const flags = el("div", "card-row");
    flags.appendChild(el("span", "card-label", "Shape"));
    const holder = el("span");
    if (bundle.drift.stable) holder.appendChild(el("span", "badge ok", "stable"));
    if (bundle.drift.wall_flag) {
      const wall = el("span", "badge wall", "wall");
      wall.dataset.field = "wall";
      holder.appendChild(wall);
    }
    if (!bundle.drift.stable && !bundle.drift.wall_flag)
      holder.appendChild(el("span", "badge warn", "drifting"));
    flags.appendChild(holder);
    drift.appendChild(flags);
    card.appendChild(drift);
  }
  return card;
}

export function renderLapTable(laps: Lap[], onPick: (index: number) => void): HTMLElement {
  const wrap = el("section", "card lap-card");
  if (laps.length === 0) {
    wrap.appendChild(el("div", "muted", "no laps"));
    return wrap;
  }
  const table = document.createElement("table");
  table.className = "lap-table";
  const head = document.createElement("tr");
  for (const h of ["Lap", "Time", "Distance", "HR", "Speed"]) {
    head.appendChild(el("th", undefined, h));
  }
  table.appendChild(head);
  laps.forEach((lap, i) => {
    const tr = document.createElement("tr");
    tr.dataset.lapIndex = String(i);
    tr.appendChild(el("td", undefined, String(i + 1)));
    tr.appendChild(el("td", undefined, formatDuration(lap.total_time)));
    tr.appendChild(
      el(
        "td",
        undefined,
        lap.total_distance === null ? "-" : `${(lap.total_distance / 1000).toFixed(2)} km`,
      ),
    );
    tr.appendChild(
      el("td", undefined, lap.avg_heart_rate === null ? "-" : lap.avg_heart_rate.toFixed(0)),
    );
    tr.appendChild(el("td", undefined, lap.avg_speed === null ? "-" : `${lap.avg_speed.toFixed(2)} m/s`));
    tr.addEventListener("click", () => onPick(i));
    table.appendChild(tr);
  });
  wrap.appendChild(table);
  return wrap;
}

export function renderLegend(traces: Trace[]): HTMLElement {
  const legend = el("div", "legend");
  for (const trace of traces) {
    const chip = el("span", "legend-chip");
    chip.dataset.traceId = trace.id;
    const swatch = el("span", "legend-swatch");
    swatch.style.background = trace.color;
    chip.appendChild(swatch);
    chip.appendChild(el("span", undefined, trace.label));
    legend.appendChild(chip);
  }
  return legend;
}

/** Per-trace value at the cursor, shown verbatim. */
export function renderReadout(traces: Trace[], cursor: number | null): HTMLElement {
  const readout = el("div", "readout");
  if (cursor === null) return readout;
  for (const trace of traces) {
    const i = nearestIndex(trace.xs, cursor);
    const value = i === null ? null : trace.vs[i];
    const item = el("span", "readout-item");
    item.dataset.traceId = trace.id;
    item.dataset.traceKey = trace.key;
    const swatch = el("span", "legend-swatch");
    swatch.style.background = trace.color;
    item.appendChild(swatch);
    item.appendChild(el("span", "readout-label", trace.label));
    const v = el("span", "readout-value", value === null || value === undefined ? "-" : String(value));
    v.dataset.value = "";
    item.appendChild(v);
    readout.appendChild(item);
  }
  return readout;
}
