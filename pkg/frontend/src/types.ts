// Wire types for the analysis service. Field names and shapes mirror the
// JSON payloads exactly; the viewer never recomputes any of these values.

export type Band = "well_fitted" | "intermediate" | "poorly_fitted";

export interface ActivityListRow {
  id: string;
  start_time: string;
  sport: string;
  distance_km: number | null;
  hre: number | null;
  band: Band | null;
}

export interface SessionSummary {
  date: string;
  distance_km: number | null;
  moving_time: number | null;
  avg_hr: number | null;
  avg_pace: number | null;
  hre: number | null;
  source: string;
}

export interface SampleArrays {
  t: number[];
  distance: (number | null)[];
  lat: (number | null)[];
  lon: (number | null)[];
  altitude: (number | null)[];
  hr: (number | null)[];
  pace: (number | null)[];
  hre: (number | null)[];
  grade: (number | null)[];
}

export interface Lap {
  start_index: number;
  end_index: number;
  total_time: number | null;
  total_distance: number | null;
  avg_heart_rate: number | null;
  avg_speed: number | null;
}

export interface DriftReport {
  warmup_excluded: number;
  mean_hre: number;
  slope: number;
  drift_pct: number;
  stable: boolean;
  late_degradation_pct: number;
  wall_flag: boolean;
}

export interface FitnessInfo {
  band: Band;
  mean_hre: number;
}

export interface ActivityBundle {
  id: string;
  start_time: string;
  sport: string;
  summary: SessionSummary;
  samples: SampleArrays;
  laps: Lap[];
  drift: DriftReport | null;
  fitness: FitnessInfo | null;
  has_rr: boolean;
}

export interface BreathingSeries {
  unit: string;
  t: number[];
  v: number[];
}

export interface RollupRow {
  period: string;
  total_distance_km: number;
  session_count: number;
  avg_pace: number | null;
  avg_hr: number | null;
  avg_hre: number | null;
  min_hre: number | null;
  avg_monthly_distance_km: number | null;
}
