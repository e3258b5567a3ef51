import { describe, expect, it } from "vitest";

import {
  applyOverlay,
  defaultAxisMode,
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
  type ViewState,
} from "../src/state";
import type { ActivityBundle } from "../src/types";
import constantJson from "./fixtures/constant.json";
import wellJson from "./fixtures/well.json";
import wallJson from "./fixtures/wall.json";

const constant = constantJson as unknown as ActivityBundle;
const well = wellJson as unknown as ActivityBundle;
const wall = wallJson as unknown as ActivityBundle;

function makeBundle(overrides: Partial<ActivityBundle["samples"]>): ActivityBundle {
  const t = [0, 1, 2, 3];
  return {
    id: "synthetic",
    start_time: "2018-08-01T08:00:00+00:00",
    sport: "running",
    summary: {
      date: "2018-08-01",
      distance_km: null,
      moving_time: 7000,
      avg_hr: null,
      avg_pace: null,
      hre: null,
      source: "fit-file",
    },
    samples: {
      t,
      distance: [null, null, null, null],
      lat: [null, null, null, null],
      lon: [null, null, null, null],
      altitude: [null, null, null, null],
      hr: [120, 121, 122, 123],
      pace: [6, 6, 6, 6],
      hre: [720, 726, 732, 738],
      grade: [null, null, null, null],
      ...overrides,
    },
    laps: [],
    drift: null,
    fitness: null,
    has_rr: false,
  };
}

describe("initial state", () => {
  it("starts empty with the service default window", () => {
    const s = initialState();
    expect(s.loaded).toEqual([]);
    expect(s.window).toBe(30);
    expect(s.axisMode).toBe("time");
    expect(s.visible).toEqual(["hr", "pace", "hre"]);
    expect(s.zoom).toBeNull();
    expect(s.cursor).toBeNull();
  });
});

describe("series toggling", () => {
  it("off then on restores the identical state", () => {
    for (const key of SERIES_KEYS) {
      const base: ViewState = { ...initialState(), visible: ["hr", "pace", "hre"] };
      const roundTrip = toggleSeries(toggleSeries(base, key), key);
      expect(roundTrip).toEqual(base);
    }
  });

  it("keeps canonical ordering regardless of toggle order", () => {
    let s = { ...initialState(), visible: [] as ViewState["visible"] };
    s = toggleSeries(s, "grade");
    s = toggleSeries(s, "hr");
    s = toggleSeries(s, "breathing");
    expect(s.visible).toEqual(["hr", "grade", "breathing"]);
  });
});

describe("zoom and cursor invariants", () => {
  it("normalizes a reversed zoom range", () => {
    const s = setZoom(initialState(), [100, 20]);
    expect(s.zoom).toEqual([20, 100]);
  });

  it("ignores a degenerate zoom range", () => {
    const base = initialState();
    expect(setZoom(base, [50, 50])).toBe(base);
  });

  it("clamps the cursor into a new zoom range", () => {
    let s = setCursor(initialState(), 500);
    s = setZoom(s, [100, 200]);
    expect(s.cursor).toBe(200);
    s = setZoom(s, [120, 180]);
    expect(s.cursor).toBe(180);
  });

  it("clamps a cursor set outside the active zoom", () => {
    let s = setZoom(initialState(), [10, 20]);
    s = setCursor(s, 999);
    expect(s.cursor).toBe(20);
    s = setCursor(s, -5);
    expect(s.cursor).toBe(10);
    s = setCursor(s, 15);
    expect(s.cursor).toBe(15);
  });

  it("clearing zoom keeps the cursor free", () => {
    let s = setZoom(initialState(), [10, 20]);
    s = setZoom(s, null);
    s = setCursor(s, 999);
    expect(s.cursor).toBe(999);
  });
});

describe("axis mode", () => {
  it("is unchanged when re-selecting the current mode", () => {
    const base = initialState();
    expect(setAxisMode(base, "time")).toBe(base);
  });

  it("resets zoom and cursor when units change", () => {
    let s = setZoom(initialState(), [10, 20]);
    s = setCursor(s, 15);
    s = setAxisMode(s, "distance");
    expect(s.axisMode).toBe("distance");
    expect(s.zoom).toBeNull();
    expect(s.cursor).toBeNull();
  });
});

describe("smoothing window", () => {
  it("accepts positive values and rejects the rest", () => {
    const base = initialState();
    expect(setWindow(base, 45).window).toBe(45);
    expect(setWindow(base, 0)).toBe(base);
    expect(setWindow(base, -5)).toBe(base);
    expect(setWindow(base, NaN)).toBe(base);
    expect(setWindow(base, Infinity)).toBe(base);
  });
});

describe("default axis mode", () => {
  it("uses time for a short activity", () => {
    expect(defaultAxisMode(constant)).toBe("time");
  });

  it("uses distance for races beyond 90 minutes", () => {
    expect(defaultAxisMode(well)).toBe("distance");
    expect(defaultAxisMode(wall)).toBe("distance");
  });

  it("falls back to time when there is no distance channel", () => {
    const bundle = makeBundle({ distance: [null, null, null, null] });
    expect(defaultAxisMode(bundle)).toBe("time");
  });
});

describe("loading", () => {
  it("loadOne replaces the loaded set and resets view extent", () => {
    let s = setZoom(initialState(), [5, 50]);
    s = setCursor(s, 30);
    s = loadOne(s, well);
    expect(s.loaded).toEqual(["well"]);
    expect(s.axisMode).toBe("distance");
    expect(s.zoom).toBeNull();
    expect(s.cursor).toBeNull();
  });
});

describe("overlay planning", () => {
  it("zero ids is the empty state", () => {
    expect(planOverlay([])).toEqual({ kind: "empty" });
  });

  it("a single id behaves as plain load", () => {
    expect(planOverlay([wall])).toEqual({ kind: "single", id: "wall" });
  });

  it("agreeing defaults proceed without a prompt", () => {
    expect(planOverlay([well, wall])).toEqual({ kind: "ok", mode: "distance" });
  });

  it("disagreeing defaults prompt with every shared mode", () => {
    const plan = planOverlay([constant, well]);
    expect(plan.kind).toBe("prompt");
    if (plan.kind === "prompt") expect(plan.options).toEqual(["time", "distance"]);
  });

  it("a member without distance restricts the prompt to time", () => {
    const noDistance = makeBundle({ distance: [null, null, null, null] });
    const plan = planOverlay([noDistance, well]);
    expect(plan).toEqual({ kind: "prompt", options: ["time"] });
  });

  it("applyOverlay pins the common mode", () => {
    const s = applyOverlay(initialState(), ["well", "wall"], "distance");
    expect(s.loaded).toEqual(["well", "wall"]);
    expect(s.axisMode).toBe("distance");
    expect(s.zoom).toBeNull();
    expect(s.cursor).toBeNull();
  });
});

describe("channel presence", () => {
  it("sees GPS and distance in the recorded fixtures", () => {
    expect(hasGps(constant)).toBe(true);
    expect(hasDistance(constant)).toBe(true);
  });

  it("handles channels that are entirely null", () => {
    const bundle = makeBundle({ lat: [null, null, null, null] });
    expect(hasGps(bundle)).toBe(false);
    expect(hasDistance(bundle)).toBe(false);
  });
});
