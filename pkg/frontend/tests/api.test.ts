import { afterEach, describe, expect, it, vi } from "vitest";

import { Api, ApiError } from "../src/api";

type StubResponse = {
  ok: boolean;
  status: number;
  statusText: string;
  json: () => Promise<unknown>;
};

function jsonResponse(body: unknown, status = 200): StubResponse {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: status === 200 ? "OK" : "Error",
    json: async () => body,
  };
}

function stubFetch(impl: (url: string) => StubResponse | Promise<StubResponse>) {
  const mock = vi.fn(async (url: string) => impl(url) as unknown as Response);
  vi.stubGlobal("fetch", mock);
  return mock;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("request URLs", () => {
  it("lists activities", async () => {
    const mock = stubFetch(() => jsonResponse([{ id: "a" }]));
    const rows = await new Api().listActivities();
    expect(mock).toHaveBeenCalledWith("/api/activities");
    expect(rows).toEqual([{ id: "a" }]);
  });

  it("omits the window parameter unless given", async () => {
    const mock = stubFetch(() => jsonResponse({ id: "a" }));
    const api = new Api();
    await api.bundle("a");
    expect(mock).toHaveBeenLastCalledWith("/api/activities/a");
    await api.bundle("a", 45);
    expect(mock).toHaveBeenLastCalledWith("/api/activities/a?window=45");
  });

  it("escapes activity ids", async () => {
    const mock = stubFetch(() => jsonResponse({}));
    await new Api().bundle("a b/c");
    expect(mock).toHaveBeenLastCalledWith("/api/activities/a%20b%2Fc");
  });

  it("addresses breathing and rollup routes", async () => {
    const mock = stubFetch(() => jsonResponse([]));
    const api = new Api("http://127.0.0.1:8000");
    await api.breathing("x");
    expect(mock).toHaveBeenLastCalledWith("http://127.0.0.1:8000/api/activities/x/breathing");
    await api.rollup("yearly");
    expect(mock).toHaveBeenLastCalledWith("http://127.0.0.1:8000/api/rollup?granularity=yearly");
  });
});

describe("error mapping", () => {
  it("carries the service detail through on HTTP errors", async () => {
    stubFetch(() => jsonResponse({ detail: "no such activity" }, 404));
    const err = await new Api().bundle("nope").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.detail).toBe("no such activity");
  });

  it("falls back to the status text for non-JSON error bodies", async () => {
    stubFetch(() => ({
      ok: false,
      status: 500,
      statusText: "Internal Server Error",
      json: async () => {
        throw new Error("not json");
      },
    }));
    const err = await new Api().listActivities().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(500);
    expect(err.detail).toBe("Internal Server Error");
  });

  it("maps network failure to status 0", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        throw new TypeError("fetch failed");
      }),
    );
    const err = await new Api().listActivities().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(0);
    expect(err.detail).toContain("unreachable");
  });
});
