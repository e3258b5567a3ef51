#!/usr/bin/env python3
"""Capture service JSON responses as viewer test fixtures.

The viewer's tests assert against byte-for-byte service output, so the
fixtures are recorded through the real HTTP app rather than synthesized.
Regenerate after changing the service payloads:

    python3 scripts/dump_viewer_fixtures.py --out frontend/tests/fixtures
"""
import argparse
import datetime as dt
import json
import math
from pathlib import Path

from fastapi.testclient import TestClient

from hrefit.fitcodec import (
    ActivityFixture,
    FixtureSample,
    decode_activity,
    encode_fixture,
    parse_fit,
)
from hrefit.server import build_app

UTC = dt.timezone.utc


def constant_run() -> ActivityFixture:
    # 105 bpm at 2.5 m/s: HRE exactly 700 even after wire quantization
    samples = []
    rr = []
    for i in range(1200):
        samples.append(
            FixtureSample(
                elapsed=float(i),
                lat=46.52 + i * 2e-5,
                lon=6.63 + i * 1e-5,
                altitude=495.0,
                distance=2.5 * i,
                speed=2.5,
                heart_rate=105,
            )
        )
    t = 0.0
    while t < 600.0:
        interval = 0.571 + 0.028 * math.sin(2 * math.pi * 0.25 * t)
        rr.append(interval)
        t += interval
    return ActivityFixture(
        start_time=dt.datetime(2018, 8, 12, 7, 0, tzinfo=UTC),
        samples=tuple(samples),
        laps=((0, 600), (600, 1200)),
        rr_intervals=tuple(rr),
    )


def race(pace: float, hr: int, late_pace: float | None, late_hr: int | None, day: int) -> ActivityFixture:
    # 42.195 km with 10 s samples to keep the fixture files small
    speed = 1000.0 / (60.0 * pace)
    late_speed = speed if late_pace is None else 1000.0 / (60.0 * late_pace)
    late_hr = hr if late_hr is None else late_hr
    mean_speed = 0.75 * speed + 0.25 * late_speed
    total_s = 42195.0 / mean_speed
    switch = 0.75 * total_s
    samples = []
    dist = 0.0
    t = 0.0
    while t <= total_s:
        v = speed if t < switch else late_speed
        h = hr if t < switch else late_hr
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=45.0 + t * 2e-6,
                lon=7.0 + dist / 42195.0 * 0.3,
                altitude=300.0,
                distance=dist,
                speed=v,
                heart_rate=h,
            )
        )
        dist += v * 10.0
        t += 10.0
    return ActivityFixture(
        start_time=dt.datetime(2018, 9, day, 9, 0, tzinfo=UTC), samples=tuple(samples)
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="frontend/tests/fixtures")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    fixtures = {
        "constant": constant_run(),
        "well": race(5.0, 144, None, None, 16),
        "wall": race(5.2, 150, 5.75, 156, 23),
    }
    activities = [
        decode_activity(parse_fit(encode_fixture(f)), activity_id=name)
        for name, f in fixtures.items()
    ]
    client = TestClient(build_app(activities))

    def dump(name: str, path: str) -> None:
        response = client.get(path)
        response.raise_for_status()
        (out / name).write_bytes(response.content)
        print(f"wrote {out / name} ({len(response.content)} bytes)")

    dump("activities.json", "/api/activities")
    dump("constant.json", "/api/activities/constant")
    dump("well.json", "/api/activities/well")
    dump("wall.json", "/api/activities/wall")
    dump("breathing.json", "/api/activities/constant/breathing")
    dump("rollup.json", "/api/rollup?granularity=monthly")


if __name__ == "__main__":
    main()
