import { describe, expect, it } from "vitest";

import {
  breathingXs,
  cursorSample,
  gpsTrack,
  lapZoomRange,
  nearestIndex,
  overlayTraces,
  singleTraces,
  xValues,
  OVERLAY_PALETTE,
} from "../src/series";
import { initialState, type ViewState } from "../src/state";
import type { ActivityBundle, BreathingSeries } from "../src/types";
import breathingJson from "./fixtures/breathing.json";
import constantJson from "./fixtures/constant.json";
import wallJson from "./fixtures/wall.json";
import wellJson from "./fixtures/well.json";

const constant = constantJson as unknown as ActivityBundle;
const well = wellJson as unknown as ActivityBundle;
const wall = wallJson as unknown as ActivityBundle;
const breathing = breathingJson as unknown as BreathingSeries;

function viewState(overrides: Partial<ViewState>): ViewState {
  return { ...initialState(), ...overrides };
}

function nearestByScan(xs: (number | null)[], x: number): number | null {
  let best: number | null = null;
  let bestDist = Infinity;
  xs.forEach((v, i) => {
    if (v === null) return;
    const d = Math.abs(v - x);
    if (d < bestDist) {
      bestDist = d;
      best = i;
    }
  });
  return best;
}

// deterministic linear congruential generator for reproducible cases
function lcg(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0;
    return s / 2 ** 32;
  };
}

describe("x values", () => {
  it("time mode passes sample times through", () => {
    expect(xValues(constant, "time")).toEqual(constant.samples.t);
  });

  it("distance mode shows service meters as km, keeping nulls", () => {
    const xs = xValues(constant, "distance");
    expect(xs[0]).toBe(0);
    expect(xs[100]).toBe(constant.samples.distance[100]! / 1000);
    const holed = { ...constant, samples: { ...constant.samples, distance: [null, 5, null] } };
    expect(xValues(holed as ActivityBundle, "distance")).toEqual([null, 0.005, null]);
  });
});

describe("nearest sample lookup", () => {
  it("finds exact and between-sample hits", () => {
    const xs = [0, 10, 20, 30];
    expect(nearestIndex(xs, 0)).toBe(0);
    expect(nearestIndex(xs, 30)).toBe(3);
    expect(nearestIndex(xs, 13)).toBe(1);
    expect(nearestIndex(xs, 17)).toBe(2);
    expect(nearestIndex(xs, -100)).toBe(0);
    expect(nearestIndex(xs, 1e9)).toBe(3);
  });

  it("ignores null holes", () => {
    const xs = [null, 2, null, null, 8, null];
    expect(nearestIndex(xs, 0)).toBe(1);
    expect(nearestIndex(xs, 7)).toBe(4);
    expect(nearestIndex(xs, 100)).toBe(4);
  });

  it("returns null when nothing is numeric", () => {
    expect(nearestIndex([], 5)).toBeNull();
    expect(nearestIndex([null, null], 5)).toBeNull();
  });

  it("matches a linear scan on randomized ascending arrays", () => {
    const rand = lcg(20180812);
    for (let trial = 0; trial < 300; trial++) {
      const n = 1 + Math.floor(rand() * 40);
      const xs: (number | null)[] = [];
      let value = rand() * 10;
      for (let i = 0; i < n; i++) {
        value += rand() * 5;
        xs.push(rand() < 0.3 ? null : value);
      }
      const probe = rand() * (value + 10) - 5;
      const got = nearestIndex(xs, probe);
      const want = nearestByScan(xs, probe);
      if (want === null) {
        expect(got).toBeNull();
      } else {
        expect(got).not.toBeNull();
        expect(Math.abs(xs[got!]! - probe)).toBe(Math.abs(xs[want]! - probe));
      }
    }
  });
});

describe("trace building", () => {
  it("single mode passes service arrays through untouched", () => {
    const state = viewState({ visible: ["hr", "pace", "hre", "grade"] });
    const traces = singleTraces(constant, state, null);
    expect(traces.map((t) => t.key)).toEqual(["hr", "pace", "hre", "grade"]);
    expect(traces[0]!.vs).toEqual(constant.samples.hr);
    expect(traces[1]!.vs).toEqual(constant.samples.pace);
    expect(traces[2]!.vs).toEqual(constant.samples.hre);
    expect(traces[3]!.vs).toEqual(constant.samples.grade);
  });

  it("breathing appears only once its series arrives", () => {
    const state = viewState({ visible: ["hre", "breathing"] });
    expect(singleTraces(constant, state, null).map((t) => t.key)).toEqual(["hre"]);
    const withBreathing = singleTraces(constant, state, breathing);
    expect(withBreathing.map((t) => t.key)).toEqual(["hre", "breathing"]);
    expect(withBreathing[1]!.vs).toEqual(breathing.v);
  });

  it("breathing maps onto the distance axis through sample times", () => {
    const xs = breathingXs(constant, breathing, "distance");
    expect(xs.length).toBe(breathing.t.length);
    const t0 = breathing.t[0]!;
    const sampleIdx = nearestIndex(constant.samples.t, t0)!;
    expect(xs[0]).toBe(constant.samples.distance[sampleIdx]! / 1000);
  });

  it("overlay mode draws one HRE trace per activity in distinct colors", () => {
    const state = viewState({ axisMode: "distance" });
    const traces = overlayTraces([well, wall], state);
    expect(traces.length).toBe(2);
    expect(traces.every((t) => t.key === "hre" && t.scale === "hre")).toBe(true);
    expect(traces[0]!.color).not.toBe(traces[1]!.color);
    expect(traces[0]!.color).toBe(OVERLAY_PALETTE[0]);
    expect(traces[0]!.vs).toEqual(well.samples.hre);
    expect(traces[1]!.vs).toEqual(wall.samples.hre);
  });
});

describe("lap zoom", () => {
  it("matches the lap's sample range on the time axis", () => {
    const lap1 = constant.laps[0]!;
    const lap2 = constant.laps[1]!;
    expect(lapZoomRange(constant, lap1, "time")).toEqual([
      constant.samples.t[lap1.start_index],
      constant.samples.t[lap1.end_index],
    ]);
    // final lap: end_index is one past the last sample
    expect(lapZoomRange(constant, lap2, "time")).toEqual([
      constant.samples.t[600],
      constant.samples.t[constant.samples.t.length - 1],
    ]);
  });

  it("follows the distance axis when selected", () => {
    const lap2 = constant.laps[1]!;
    const range = lapZoomRange(constant, lap2, "distance");
    expect(range).toEqual([
      constant.samples.distance[600]! / 1000,
      constant.samples.distance[constant.samples.t.length - 1]! / 1000,
    ]);
  });
});

describe("GPS linkage", () => {
  it("keeps a sample index for every drawn point", () => {
    const track = gpsTrack(constant);
    expect(track.points.length).toBe(track.indices.length);
    expect(track.points.length).toBe(constant.samples.t.length);
    expect(track.points[0]).toEqual([constant.samples.lat[0], constant.samples.lon[0]]);
    expect(track.indices[0]).toBe(0);
  });

  it("skips samples without coordinates", () => {
    const samples = {
      ...constant.samples,
      lat: constant.samples.lat.map((v, i) => (i % 2 === 0 ? null : v)),
    };
    const track = gpsTrack({ ...constant, samples } as ActivityBundle);
    expect(track.points.length).toBe(Math.floor(constant.samples.t.length / 2));
    expect(track.indices.every((i) => i % 2 === 1)).toBe(true);
  });

  it("cursorSample resolves the chart position to coordinates", () => {
    const sample = cursorSample(constant, "time", 100.4)!;
    expect(sample.index).toBe(100);
    expect(sample.lat).toBe(constant.samples.lat[100]);
    expect(sample.lon).toBe(constant.samples.lon[100]);
  });
});
