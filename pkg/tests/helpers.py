"""Shared fixture builders for the test suite."""
from __future__ import annotations

import math
from datetime import datetime, timezone

from hrefit.fitcodec import (
    ActivityFixture,
    FixtureSample,
    decode_activity,
    encode_fixture,
    parse_fit,
)
from hrefit.model import Activity

START = datetime(2018, 8, 27, 9, 0, tzinfo=timezone.utc)


def roundtrip(fixture: ActivityFixture) -> Activity:
    """encode -> parse -> decode."""
    return decode_activity(parse_fit(encode_fixture(fixture)))


def steady_fixture(
    n: int = 1200,
    hr: int | None = 140,
    speed: float | None = 10.0 / 3.0,
    start: datetime = START,
    altitude=None,
    with_gps: bool = False,
    laps: tuple[tuple[int, int], ...] = (),
    rr_intervals: tuple[float, ...] = (),
) -> ActivityFixture:
    """n one-second samples at constant speed and heart rate.

    altitude may be None, a constant, or a callable of elapsed seconds.
    """
    samples = []
    for i in range(n):
        alt = altitude(i) if callable(altitude) else altitude
        samples.append(
            FixtureSample(
                elapsed=float(i),
                lat=45.0 + i * 2e-5 if with_gps else None,
                lon=7.0 + i * 1e-5 if with_gps else None,
                altitude=alt,
                distance=None if speed is None else speed * i,
                speed=speed,
                heart_rate=hr,
            )
        )
    return ActivityFixture(
        start_time=start, samples=tuple(samples), laps=laps, rr_intervals=rr_intervals
    )


def steady_activity(**kwargs) -> Activity:
    return roundtrip(steady_fixture(**kwargs))


def race_fixture(
    distance_km: float,
    pace_min_km: float,
    hr: int,
    late_pace: float | None = None,
    late_hr: int | None = None,
    late_fraction: float = 0.25,
    start: datetime = START,
    with_gps: bool = True,
) -> ActivityFixture:
    """A race at constant pace/HR, optionally degrading for the final part.

    The late segment covers the last late_fraction of the *time* span.
    """
    speed = 1000.0 / (60.0 * pace_min_km)
    late_speed = speed if late_pace is None else 1000.0 / (60.0 * late_pace)
    late_hr = hr if late_hr is None else late_hr

    # total time solving distance across the two speed segments
    d_m = distance_km * 1000.0
    mean_speed = (1 - late_fraction) * speed + late_fraction * late_speed
    total_s = d_m / mean_speed
    n = int(total_s) + 1
    switch = (1 - late_fraction) * total_s

    samples = []
    dist = 0.0
    for i in range(n):
        v = speed if i < switch else late_speed
        h = hr if i < switch else late_hr
        if i > 0:
            dist += v
        samples.append(
            FixtureSample(
                elapsed=float(i),
                lat=45.0 + i * 2e-5 if with_gps else None,
                lon=7.0 if with_gps else None,
                distance=dist,
                speed=v,
                heart_rate=h,
            )
        )
    return ActivityFixture(start_time=start, samples=tuple(samples))


def well_fitted_race() -> ActivityFixture:
    """42.195 km at 5:00/km and HR 144: HRE 720 throughout."""
    return race_fixture(42.195, 5.0, 144)


def poorly_fitted_race() -> ActivityFixture:
    """HRE 780 for the first 75% of the span, then +15%."""
    return race_fixture(42.195, 5.2, 150, late_pace=5.75, late_hr=156)


def rr_with_breathing(
    freq_hz: float,
    duration_s: float = 300.0,
    base_rr: float | None = None,
    depth: float | None = None,
) -> list[float]:
    """RR intervals modulated sinusoidally at a planted breathing frequency.

    The beat rate must exceed twice the breathing frequency or the
    modulation aliases (beats are the sample clock).  The default base RR
    keeps at least three beats per breath, which is also how real hearts
    and lungs pair up: fast breathing happens at high heart rates.
    """
    if base_rr is None:
        base_rr = min(0.85, max(0.3, 1.0 / (3.0 * freq_hz)))
    if depth is None:
        depth = base_rr * 0.05
    out = []
    t = 0.0
    while t < duration_s:
        rr = base_rr + depth * math.sin(2 * math.pi * freq_hz * t)
        out.append(rr)
        t += rr
    return out


TABLE_CSV = (
    b"Date,Distance_km,Pace,Avg_HR,Note\n"
    b"8/27/2018,15.7,5:25,140,tempo\n"
    b"9/2/2018,21.2,5:48,143,\n"
    b"9/9/2018,15.4,5:50,147,\n"
    b"9/16/2018,17.3,6:04,144,long\n"
)
