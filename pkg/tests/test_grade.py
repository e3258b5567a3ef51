"""Terrain grade estimation and its correlation with HRE."""
import numpy as np
import pytest

from hrefit.metrics import (
    DegenerateVariance,
    NoAltitude,
    grade_series,
    hre_grade_correlation,
    pearson,
)

from helpers import START, roundtrip, steady_fixture
from hrefit.fitcodec import ActivityFixture, FixtureSample
from hrefit.model import Activity, Sample
from datetime import timedelta


def build_activity(points):
    """points: (t, altitude, distance, speed, hr) tuples; bypasses the codec."""
    samples = tuple(
        Sample(
            t=float(t),
            timestamp=START + timedelta(seconds=t),
            altitude=alt,
            distance=d,
            speed=v,
            heart_rate=hr,
        )
        for t, alt, d, v, hr in points
    )
    return Activity(id="g", start_time=START, sport="running", samples=samples)


def test_flat_route_zero_grade():
    pts = [(i, 300.0, 3.0 * i, 3.0, 140) for i in range(600)]
    g = grade_series(build_activity(pts))
    assert all(v == pytest.approx(0.0, abs=1e-12) for v in g.v)


def test_constant_climb_everywhere():
    # 5% grade at 3 m/s: altitude rises 0.15 m/s
    pts = [(i, 100.0 + 0.15 * i, 3.0 * i, 3.0, 140) for i in range(600)]
    g = grade_series(build_activity(pts))
    assert len(g.v) == 600
    for v in g.v:
        assert v == pytest.approx(0.05, abs=1e-3)


def test_out_and_back_antisymmetry():
    # climb at 5% to the apex, descend at 5% after; symmetric time grid
    n = 601  # apex exactly at sample 300
    pts = []
    for i in range(n):
        alt = 100.0 + 0.15 * min(i, n - 1 - i)
        pts.append((i, alt, 3.0 * i, 3.0, 140))
    g = grade_series(build_activity(pts))
    for i in range(n):
        a, b = g.v[i], g.v[n - 1 - i]
        assert a is not None and b is not None
        assert a == pytest.approx(-b, abs=1e-9)


def test_standing_still_grade_absent():
    # distance barely advances: delta under the minimum
    pts = [(i, 100.0 + 0.01 * i, 0.05 * i, 0.05, 140) for i in range(120)]
    g = grade_series(build_activity(pts))
    assert all(v is None for v in g.v)


def test_no_altitude_raises():
    pts = [(i, None, 3.0 * i, 3.0, 140) for i in range(60)]
    with pytest.raises(NoAltitude):
        grade_series(build_activity(pts))


def test_no_distance_raises():
    pts = [(i, 200.0, None, 3.0, 140) for i in range(60)]
    with pytest.raises(NoAltitude):
        grade_series(build_activity(pts))


def test_absent_altitude_stays_absent():
    pts = [
        (i, None if 100 <= i < 110 else 300.0, 3.0 * i, 3.0, 140) for i in range(300)
    ]
    g = grade_series(build_activity(pts))
    # windows touching the absent stretch lose an endpoint value only if
    # the endpoint itself is absent
    for i in range(100, 110):
        assert g.v[i] is None or g.v[i] == pytest.approx(0.0, abs=1e-9)
    assert g.v[50] == pytest.approx(0.0, abs=1e-12)


def test_pearson_exact_on_linear():
    xs = np.array([1.0, 2.0, 3.0, 4.0])
    assert pearson(xs, 2.0 * xs + 1.0) == pytest.approx(1.0)
    assert pearson(xs, -0.5 * xs + 3.0) == pytest.approx(-1.0)


def test_pearson_degenerate():
    xs = np.array([1.0, 1.0, 1.0])
    with pytest.raises(DegenerateVariance):
        pearson(xs, np.array([1.0, 2.0, 3.0]))
    with pytest.raises(DegenerateVariance):
        pearson(np.array([1.0]), np.array([2.0]))


def test_hre_tracks_grade_positively():
    # HR proportional to grade on rolling terrain at constant speed:
    # after smoothing both, correlation should be strongly positive
    import math

    n = 1800
    alt = 100.0
    rows = []
    for i in range(n):
        slope = 0.05 * math.sin(2 * math.pi * i / 600.0)
        hr = int(round(140 + 400 * slope))
        rows.append((i, alt, 3.0 * i, 3.0, hr))
        alt += slope * 3.0
    r = hre_grade_correlation(build_activity(rows))
    assert r > 0.9


def test_uncorrelated_noise_low_r():
    rng = np.random.default_rng(11)
    alt = 100.0
    rows = []
    n = 1800
    slopes = rng.normal(0.0, 0.02, size=n)
    hrs = rng.integers(135, 146, size=n)
    for i in range(n):
        rows.append((i, alt, 3.0 * i, 3.0, int(hrs[i])))
        alt += float(slopes[i]) * 3.0
    r = hre_grade_correlation(build_activity(rows))
    assert abs(r) < 0.2


def test_constant_hre_against_varying_grade_degenerate():
    import math

    alt = 100.0
    rows = []
    for i in range(1200):
        slope = 0.04 * math.sin(2 * math.pi * i / 300.0)
        rows.append((i, alt, 3.0 * i, 3.0, 140))
        alt += slope * 3.0
    with pytest.raises(DegenerateVariance):
        hre_grade_correlation(build_activity(rows))


def test_grade_through_codec_quantization():
    # same 5% climb but through encode/decode: wire resolution 0.2 m
    fx = steady_fixture(n=600, altitude=lambda i: 100.0 + 0.15 * i, speed=3.0)
    g = grade_series(roundtrip(fx))
    mid = [v for v in g.v[50:550] if v is not None]
    assert mid
    assert np.mean(mid) == pytest.approx(0.05, abs=2e-3)
