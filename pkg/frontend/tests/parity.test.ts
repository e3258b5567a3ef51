// Acceptance: rendered values are the service's values, overlays stay
// distinguishable, and the cursor resolves to the correct GPS sample.

import { describe, expect, it } from "vitest";

import { computeLayout } from "../src/chart";
import { renderReadout, renderSummaryCard } from "../src/panels";
import {
  cursorSample,
  gpsTrack,
  nearestIndex,
  overlayTraces,
  singleTraces,
  xValues,
} from "../src/series";
import { initialState, toggleSeries, type ViewState } from "../src/state";
import type { ActivityBundle } from "../src/types";
import constantJson from "./fixtures/constant.json";
import wallJson from "./fixtures/wall.json";
import wellJson from "./fixtures/well.json";

const constant = constantJson as unknown as ActivityBundle;
const well = wellJson as unknown as ActivityBundle;
const wall = wallJson as unknown as ActivityBundle;

function viewState(overrides: Partial<ViewState>): ViewState {
  return { ...initialState(), ...overrides };
}

describe("displayed HRE equals the service response", () => {
  it("chart traces carry the constant fixture's hre array verbatim", () => {
    const traces = singleTraces(constant, viewState({ visible: ["hre"] }), null);
    expect(traces.length).toBe(1);
    const vs = traces[0]!.vs;
    expect(vs.length).toBe(constant.samples.hre.length);
    for (let i = 0; i < vs.length; i++) {
      expect(Object.is(vs[i], constant.samples.hre[i])).toBe(true);
    }
    expect(vs.every((v) => v === null || v === 700)).toBe(true);
  });

  it("summary card text is String() of the service values", () => {
    const card = renderSummaryCard(constant);
    const field = (name: string) => card.querySelector(`[data-field="${name}"]`)!.textContent;
    expect(field("hre")).toBe(String(constant.summary.hre));
    expect(field("hre")).toBe("700");
    expect(field("band")).toBe(constant.fitness!.band);
    expect(field("mean_hre")).toBe(String(constant.drift!.mean_hre));
    expect(field("drift_pct")).toBe(String(constant.drift!.drift_pct));
    expect(field("late_degradation_pct")).toBe(String(constant.drift!.late_degradation_pct));
  });

  it("the cursor readout shows the exact value under the cursor", () => {
    const traces = singleTraces(constant, viewState({ visible: ["hr", "hre"] }), null);
    for (const cursor of [0, 123.4, 599.9, 1199]) {
      const readout = renderReadout(traces, cursor);
      const items = Array.from(readout.querySelectorAll(".readout-item"));
      expect(items.length).toBe(2);
      for (const [t, item] of traces.map((trace, i) => [trace, items[i]!] as const)) {
        const idx = nearestIndex(t.xs, cursor)!;
        const value = item.querySelector("[data-value]")!.textContent;
        expect(value).toBe(String(t.vs[idx]));
      }
    }
  });

  it("wall badge appears exactly when the service says wall", () => {
    expect(renderSummaryCard(wall).querySelector('[data-field="wall"]')).not.toBeNull();
    expect(renderSummaryCard(well).querySelector('[data-field="wall"]')).toBeNull();
  });
});

describe("overlaying the race fixtures by distance", () => {
  const state = viewState({ axisMode: "distance", loaded: ["well", "wall"] });
  const traces = overlayTraces([well, wall], state);

  it("yields two distinguishable curves", () => {
    expect(traces.length).toBe(2);
    expect(traces[0]!.color).not.toBe(traces[1]!.color);
    const wellValues = traces[0]!.vs.filter((v): v is number => v !== null);
    const wallValues = traces[1]!.vs.filter((v): v is number => v !== null);
    // one flat near 720
    expect(Math.max(...wellValues) - Math.min(...wellValues)).toBeLessThan(1);
    expect(Math.abs(wellValues[0]! - 720)).toBeLessThan(5);
    // one rising past 800 late in the race
    expect(wallValues[0]!).toBeLessThan(800);
    expect(wallValues[wallValues.length - 1]!).toBeGreaterThan(800);
  });

  it("both curves reach the canvas layout", () => {
    const layout = computeLayout(traces, {
      width: 900,
      height: 380,
      zoom: null,
      cursor: null,
    })!;
    expect(layout).not.toBeNull();
    expect(layout.paths.length).toBe(2);
    for (const path of layout.paths) {
      const drawn = path.segments.reduce((n, s) => n + s.length, 0);
      expect(drawn).toBeGreaterThan(100);
    }
    // a shared hre scale spans both curves
    expect(layout.yRanges.has("hre")).toBe(true);
    const [lo, hi] = layout.yRanges.get("hre")!;
    expect(lo).toBeLessThan(721);
    expect(hi).toBeGreaterThan(800);
  });

  it("overlay values are the service arrays verbatim", () => {
    expect(traces[0]!.vs).toEqual(well.samples.hre);
    expect(traces[1]!.vs).toEqual(wall.samples.hre);
  });
});

describe("cursor to GPS sample linkage", () => {
  const cases: [string, ActivityBundle, "time" | "distance"][] = [
    ["constant against time", constant, "time"],
    ["constant against distance", constant, "distance"],
    ["well against distance", well, "distance"],
    ["wall against distance", wall, "distance"],
  ];

  for (const [name, bundle, mode] of cases) {
    it(`${name}: first and last chart x resolve to first and last sample`, () => {
      const xs = xValues(bundle, mode);
      const n = xs.length;
      const first = cursorSample(bundle, mode, xs[0]!)!;
      expect(first.index).toBe(0);
      expect(first.lat).toBe(bundle.samples.lat[0]);
      expect(first.lon).toBe(bundle.samples.lon[0]);
      const last = cursorSample(bundle, mode, xs[n - 1]!)!;
      expect(last.index).toBe(n - 1);
      expect(last.lat).toBe(bundle.samples.lat[n - 1]);
      expect(last.lon).toBe(bundle.samples.lon[n - 1]);
      // beyond-range positions clamp to the end samples
      expect(cursorSample(bundle, mode, xs[0]! - 1e6)!.index).toBe(0);
      expect(cursorSample(bundle, mode, xs[n - 1]! + 1e6)!.index).toBe(n - 1);
    });
  }

  it("map points carry their sample index back to the chart", () => {
    const track = gpsTrack(constant);
    const n = track.points.length;
    expect(track.indices[0]).toBe(0);
    expect(track.indices[n - 1]).toBe(constant.samples.t.length - 1);
    const xs = xValues(constant, "time");
    expect(xs[track.indices[n - 1]!]).toBe(constant.samples.t[constant.samples.t.length - 1]);
  });
});

describe("render state round trip", () => {
  it("toggling a series off and on reproduces the identical layout", () => {
    const base = viewState({ visible: ["hr", "pace", "hre"], loaded: ["constant"] });
    const toggled = toggleSeries(toggleSeries(base, "pace"), "pace");
    expect(toggled).toEqual(base);
    const size = { width: 900, height: 380, zoom: null, cursor: 300 };
    const before = computeLayout(singleTraces(constant, base, null), size);
    const after = computeLayout(singleTraces(constant, toggled, null), size);
    expect(after).toEqual(before);
  });
});
