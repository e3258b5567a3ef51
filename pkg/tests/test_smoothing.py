"""Centered moving-average smoothing over time windows."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrefit.metrics import EmptySeries, smooth
from hrefit.model import SeriesUnit, TimeSeries


def series(values, ts=None, unit=SeriesUnit.BEATS_PER_KM):
    t = tuple(float(i) for i in range(len(values))) if ts is None else tuple(ts)
    return TimeSeries(unit, t, tuple(values))


def test_constant_is_fixed_point():
    s = series([700.0] * 100)
    assert smooth(s, 30.0).v == s.v


def test_single_spike_attenuates_to_one_over_window_count():
    vals = [0.0] * 101
    vals[50] = 31.0
    out = smooth(series(vals), 30.0)
    # 31 samples inside +/-15 s at 1 Hz
    assert out.v[50] == pytest.approx(1.0)
    assert out.v[34] == 0.0
    assert out.v[35] == pytest.approx(1.0)  # window [20, 50] includes the spike
    assert out.v[66] == 0.0


def test_window_smaller_than_spacing_is_identity():
    vals = [3.0, 9.0, 1.0, 7.0]
    out = smooth(series(vals, ts=[0.0, 10.0, 20.0, 30.0]), 5.0)
    assert out.v == tuple(vals)


def test_absent_values_stay_absent_and_are_excluded():
    vals = [10.0, None, 30.0]
    out = smooth(series(vals), 30.0)
    assert out.v[1] is None
    assert out.v[0] == pytest.approx(20.0)  # mean of 10 and 30
    assert out.v[2] == pytest.approx(20.0)


def test_edges_truncate():
    vals = [0.0, 10.0, 20.0, 30.0, 40.0]
    out = smooth(series(vals), 4.0)  # +/-2 s
    assert out.v[0] == pytest.approx(10.0)  # window [0, 2]: mean of 0, 10, 20
    assert out.v[2] == pytest.approx(20.0)  # full window
    assert out.v[4] == pytest.approx(30.0)  # window [2, 4]: mean of 20, 30, 40


def test_empty_series_raises():
    with pytest.raises(EmptySeries):
        smooth(TimeSeries(SeriesUnit.BPM, (), ()), 30.0)


def test_bad_window_rejected():
    with pytest.raises(ValueError):
        smooth(series([1.0]), 0.0)


@st.composite
def sparse_series(draw):
    n = draw(st.integers(min_value=1, max_value=60))
    gaps = draw(
        st.lists(
            st.floats(min_value=0.25, max_value=30.0), min_size=n - 1, max_size=n - 1
        )
    )
    t = [0.0]
    for g in gaps:
        t.append(t[-1] + g)
    vals = draw(
        st.lists(
            st.one_of(
                st.none(),
                st.floats(min_value=-1e9, max_value=1e9, allow_nan=False),
            ),
            min_size=n,
            max_size=n,
        )
    )
    return series(vals, ts=t)


@settings(max_examples=300, deadline=None)
@given(sparse_series(), st.floats(min_value=0.5, max_value=120.0))
def test_range_preservation_and_absence(s, window):
    out = smooth(s, window)
    present = [v for v in s.v if v is not None]
    for vin, vout in zip(s.v, out.v):
        if vin is None:
            assert vout is None
        else:
            assert vout is not None
            assert min(present) <= vout <= max(present)


@settings(max_examples=100, deadline=None)
@given(sparse_series())
def test_tiny_window_is_identity(s):
    # a window shorter than any gap leaves every value alone
    out = smooth(s, 0.1)
    assert out.v == s.v
