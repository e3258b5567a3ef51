import type { ActivityBundle, ActivityListRow, BreathingSeries, RollupRow } from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
    this.name = "ApiError";
  }
}

async function request<T>(url: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url);
  } catch (e) {
    throw new ApiError(0, `service unreachable (${String(e)})`);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body, keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class Api {
  constructor(private base: string = "") {}

  listActivities(): Promise<ActivityListRow[]> {
    return request(`${this.base}/api/activities`);
  }

  bundle(id: string, window?: number): Promise<ActivityBundle> {
    const query = window === undefined ? "" : `?window=${encodeURIComponent(window)}`;
    return request(`${this.base}/api/activities/${encodeURIComponent(id)}${query}`);
  }

  breathing(id: string): Promise<BreathingSeries> {
    return request(`${this.base}/api/activities/${encodeURIComponent(id)}/breathing`);
  }

  rollup(granularity: "monthly" | "yearly"): Promise<RollupRow[]> {
    return request(`${this.base}/api/rollup?granularity=${granularity}`);
  }
}
