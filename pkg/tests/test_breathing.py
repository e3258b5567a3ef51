"""Spectral breathing rate from RR-interval modulation."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrefit.metrics import InsufficientData, NoSpectralPeak, breathing_rate
from hrefit.model import RRSeries, SeriesUnit

from helpers import rr_with_breathing


def planted(freq_hz, duration_s=300.0, base_rr=None, depth=None):
    return RRSeries.from_raw(rr_with_breathing(freq_hz, duration_s, base_rr, depth))


@pytest.mark.parametrize("freq", [0.20, 0.25, 0.50, 0.80, 1.00])
def test_planted_frequency_recovered(freq):
    series = breathing_rate(planted(freq))
    present = [v for v in series.v if v is not None]
    assert len(present) >= len(series.v) * 0.8
    for rate in present:
        assert abs(rate - 60.0 * freq) <= 0.5, (freq, rate)


def test_series_clock_and_unit():
    series = breathing_rate(planted(0.25))
    assert series.unit == SeriesUnit.BREATHS_PER_MIN
    # window centers advance by the step
    assert series.t[1] - series.t[0] == pytest.approx(5.0)
    assert series.t[0] == pytest.approx(30.0)


def test_constant_rr_has_no_peak():
    with pytest.raises(NoSpectralPeak):
        breathing_rate(RRSeries.from_raw([0.8] * 400))


def test_too_little_data():
    with pytest.raises(InsufficientData):
        breathing_rate(RRSeries.from_raw([0.8] * 10))  # 8 s
    with pytest.raises(InsufficientData):
        breathing_rate(RRSeries.from_raw([]))


def test_short_but_sufficient_series_uses_one_window():
    series = breathing_rate(planted(0.30, duration_s=45.0))
    assert len(series.v) == 1
    assert series.v[0] == pytest.approx(18.0, abs=0.5)


def test_frequency_change_midway_is_tracked():
    base = 0.5  # 120 bpm keeps both frequencies under the beat Nyquist
    first = rr_with_breathing(0.25, duration_s=150.0, base_rr=base)
    elapsed = sum(first)
    second = []
    t = elapsed
    while t < elapsed + 150.0:
        rr = base + 0.025 * math.sin(2 * math.pi * 0.50 * t)
        second.append(rr)
        t += rr
    series = breathing_rate(RRSeries.from_raw(first + second))
    early = [v for c, v in zip(series.t, series.v) if v is not None and c < 100]
    late = [v for c, v in zip(series.t, series.v) if v is not None and c > 200]
    assert early and late
    assert sum(early) / len(early) == pytest.approx(15.0, abs=1.0)
    assert sum(late) / len(late) == pytest.approx(30.0, abs=1.0)


def test_slow_drift_alone_is_not_breathing():
    # linear trend with no oscillation: detrending removes it
    raw = [0.7 + 0.0005 * i for i in range(400)]
    with pytest.raises(NoSpectralPeak):
        breathing_rate(RRSeries.from_raw(raw))


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.18, max_value=1.05))
def test_sweep_within_tolerance(freq):
    series = breathing_rate(planted(freq, duration_s=240.0))
    present = [v for v in series.v if v is not None]
    assert present
    mean_rate = sum(present) / len(present)
    assert abs(mean_rate - 60.0 * freq) <= 0.5
