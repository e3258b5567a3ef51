#!/usr/bin/env python3
"""Generate small demonstration FIT files plus a manual training log.

Three synthetic activities cover the interesting shapes: a steady run
(flat HRE), a marathon that hits the wall (late HRE jump), and a hilly
loop with RR intervals (grade and breathing analysis).  Deterministic:
same bytes every run.
"""
import argparse
import datetime as dt
import math
import random
from pathlib import Path

from hrefit.fitcodec import ActivityFixture, FixtureSample, encode_fixture

UTC = dt.timezone.utc


def steady_run() -> ActivityFixture:
    rng = random.Random(71)
    samples = []
    dist = 0.0
    for t in range(0, 4200):
        speed = 10.0 / 3.0  # 5:00 min/km
        hr = 140 + (rng.random() < 0.3 and rng.choice((-1, 0, 1)) or 0)
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=47.36 + t * 2.8e-5,
                lon=8.54 + t * 1.2e-5,
                altitude=420.0,
                distance=dist,
                speed=speed,
                heart_rate=hr,
            )
        )
        dist += speed
    laps = [(i * 600, min((i + 1) * 600, len(samples))) for i in range(7)]
    return ActivityFixture(
        start_time=dt.datetime(2018, 8, 5, 7, 30, tzinfo=UTC),
        samples=samples,
        laps=laps,
    )


def wall_marathon() -> ActivityFixture:
    samples = []
    dist = 0.0
    t = 0
    target = 42195.0
    while dist < target:
        early = dist < 0.75 * target
        pace = 5.2 if early else 5.75
        hr = 150 if early else 156
        speed = 1000.0 / (pace * 60.0)
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=46.95 + 0.04 * math.sin(dist / target * math.pi),
                lon=7.44 + dist / target * 0.25,
                altitude=540.0 + 8.0 * math.sin(dist / 3000.0),
                distance=dist,
                speed=speed,
                heart_rate=hr,
            )
        )
        dist += speed
        t += 1
    return ActivityFixture(
        start_time=dt.datetime(2018, 9, 23, 9, 0, tzinfo=UTC),
        samples=samples,
        laps=[],
    )


def hilly_loop() -> ActivityFixture:
    samples = []
    rr: list[float] = []
    dist = 0.0
    alt = 610.0
    speed = 3.0
    duration = 3600
    for t in range(duration):
        grade = 0.06 * math.sin(2 * math.pi * t / 900.0)
        hr = int(round(138 + 250 * grade))
        angle = 2 * math.pi * t / duration
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=46.2 + 0.01 * math.sin(angle),
                lon=6.15 + 0.014 * math.cos(angle),
                altitude=alt,
                distance=dist,
                speed=speed,
                heart_rate=hr,
            )
        )
        dist += speed
        alt += grade * speed
    # RR intervals with breathing planted at 0.4 Hz (24 breaths/min)
    t_rr = 0.0
    while t_rr < duration:
        interval = 0.43 + 0.02 * math.sin(2 * math.pi * 0.4 * t_rr)
        rr.append(interval)
        t_rr += interval
    return ActivityFixture(
        start_time=dt.datetime(2018, 8, 19, 8, 15, tzinfo=UTC),
        samples=samples,
        laps=[(0, duration // 2), (duration // 2, duration)],
        rr_intervals=rr,
    )


TRAINING_LOG = """\
date,distance_km,pace,avg_hr,note
8/27/2018,15.7,5:25,140,tempo
8/9/2018,12.8,5:48,143,
8/2/2018,11.0,5:50,147,
7/30/2018,10.5,6:04,144,long
"""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="fixtures", help="output directory")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for name, build in (
        ("steady_run.fit", steady_run),
        ("wall_marathon.fit", wall_marathon),
        ("hilly_loop.fit", hilly_loop),
    ):
        blob = encode_fixture(build())
        (out / name).write_bytes(blob)
        print(f"wrote {out / name} ({len(blob)} bytes)")

    (out / "training_log.csv").write_text(TRAINING_LOG, encoding="utf-8")
    print(f"wrote {out / 'training_log.csv'}")


if __name__ == "__main__":
    main()
