"""Session summaries and monthly/yearly rollups."""

import datetime as dt
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrefit.aggregate import (
    CSV_ROLLUP_HEADER,
    CSV_SUMMARY_HEADER,
    NoHeartRate,
    PeriodTotals,
    RollupRow,
    ZeroDistance,
    export,
    finalize_rollup,
    import_json,
    merge_rollup_states,
    monthly_rollup,
    rollup_state,
    summarize_session,
    yearly_rollup,
)
from hrefit.model import FIT_SOURCE, MANUAL_SOURCE, Activity, Sample, SessionSummary

START = dt.datetime(2018, 8, 4, 7, 30, 0, tzinfo=dt.timezone.utc)


def _activity(rows, summary=None, source=FIT_SOURCE):
    samples = tuple(
        Sample(
            t=float(t),
            timestamp=None,
            lat=None,
            lon=None,
            altitude=None,
            distance=distance,
            speed=speed,
            heart_rate=hr,
        )
        for (t, distance, speed, hr) in rows
    )
    return Activity(
        id="agg-test",
        start_time=START,
        sport="running",
        samples=samples,
        laps=(),
        rr=None,
        source=source,
        summary=summary,
    )


def _summary(day, distance_km, pace, hr, month=8, year=2018):
    return SessionSummary(
        date=dt.date(year, month, day),
        distance_km=distance_km,
        moving_time=pace * distance_km * 60.0,
        avg_hr=float(hr),
        avg_pace=pace,
        hre=float(hr) * pace,
        source=MANUAL_SOURCE,
    )


# ---------------------------------------------------------------- summarize


def test_summarize_constant_run_exact():
    # 10 m every 3 s: distance lands on 10 km exactly, 3000 s moving,
    # so pace and HRE come out as exact floats
    rows = [(3 * i, 10.0 * i, None, 140) for i in range(1001)]
    s = summarize_session(_activity(rows))
    assert s.distance_km == 10.0
    assert s.moving_time == 3000.0
    assert s.avg_hr == 140.0
    assert s.avg_pace == 5.0
    assert s.hre == 700.0
    assert s.date == START.date()
    assert s.source == FIT_SOURCE


def test_summarize_returns_stored_summary_verbatim():
    stored = _summary(4, 12.0, 5.416666666666667, 140)
    a = _activity([], summary=stored, source=MANUAL_SOURCE)
    assert summarize_session(a) is stored


def test_summarize_no_heart_rate():
    rows = [(i, 3.0 * i, 3.0, None) for i in range(600)]
    with pytest.raises(NoHeartRate):
        summarize_session(_activity(rows))


def test_summarize_zero_distance():
    rows = [(i, 0.0, 0.0, 140) for i in range(600)]
    with pytest.raises(ZeroDistance):
        summarize_session(_activity(rows))
    with pytest.raises(ZeroDistance):
        summarize_session(_activity([(i, None, None, 140) for i in range(600)]))


def test_summarize_excludes_stopped_time_from_pace():
    # 500 s moving at 4 m/s, then 100 s standing still, then 500 s moving:
    # pace uses 1000 s moving time over 4 km
    rows = []
    d = 0.0
    for i in range(1101):
        rows.append((i, d, None, 150))
        if not (500 <= i < 600):
            d += 4.0
    s = summarize_session(_activity(rows))
    assert s.distance_km == pytest.approx(4.0, rel=1e-6)
    assert s.moving_time == pytest.approx(1000.0, abs=1.5)
    assert s.avg_pace == pytest.approx((s.moving_time / 60.0) / s.distance_km)


# ------------------------------------------------------------------ rollups


def test_monthly_mean_of_integer_hres():
    # four sessions whose HREs are whole numbers: the monthly mean is the
    # plain average of those four values
    summaries = [
        _summary(4, 10.0, 758.0 / 140.0, 140),
        _summary(11, 12.0, 829.0 / 146.0, 146),
        _summary(18, 11.0, 857.0 / 149.0, 149),
        _summary(25, 9.5, 874.0 / 152.0, 152),
    ]
    for s in summaries:
        assert s.hre == pytest.approx(
            {4: 758.0, 11: 829.0, 18: 857.0, 25: 874.0}[s.date.day], abs=1e-9
        )
    rows = monthly_rollup(summaries)
    assert len(rows) == 1
    row = rows[0]
    assert row.period == "2018-08"
    assert row.session_count == 4
    assert row.total_distance_km == pytest.approx(42.5)
    assert row.avg_hre == pytest.approx(829.5, abs=1e-9)
    assert row.min_hre is None
    assert row.avg_monthly_distance_km is None


def test_single_session_month_mirrors_the_session():
    s = _summary(4, 10.0, 5.0, 140)
    (row,) = monthly_rollup([s])
    assert row.session_count == 1
    assert row.total_distance_km == 10.0
    assert row.avg_pace == 5.0
    assert row.avg_hr == 140.0
    assert row.avg_hre == 700.0


def test_short_jogs_count_distance_but_not_averages():
    # below the 5 km qualifying floor: distance and count accumulate,
    # averages stay empty
    summaries = [_summary(d, 2.0, 6.0, 130) for d in (1, 8, 15)]
    (row,) = monthly_rollup(summaries)
    assert row.session_count == 3
    assert row.total_distance_km == 6.0
    assert row.avg_pace is None
    assert row.avg_hr is None
    assert row.avg_hre is None


def test_mixed_month_splits_totals_and_averages():
    summaries = [_summary(1, 2.0, 6.0, 130), _summary(8, 10.0, 5.0, 140)]
    (row,) = monthly_rollup(summaries)
    assert row.session_count == 2
    assert row.total_distance_km == 12.0
    assert row.avg_hre == 700.0  # the jog does not dilute it


def test_sessions_spread_over_months_sorted():
    summaries = [
        _summary(1, 10.0, 5.0, 140, month=9),
        _summary(1, 10.0, 5.0, 140, month=8),
        _summary(1, 10.0, 5.0, 140, month=1, year=2019),
    ]
    rows = monthly_rollup(summaries)
    assert [r.period for r in rows] == ["2018-08", "2018-09", "2019-01"]


def test_yearly_identical_sessions():
    summaries = [_summary(1, 10.0, 5.0, 140, month=m) for m in range(1, 13)]
    (row,) = yearly_rollup(summaries)
    assert row.period == "2018"
    assert row.session_count == 12
    assert row.total_distance_km == 120.0
    assert row.avg_hre == 700.0
    assert row.min_hre == 700.0
    assert row.avg_monthly_distance_km == 10.0


def test_yearly_average_is_mean_of_session_hres_not_product_of_means():
    # two sessions with mean pace 6.0167 and mean HR 148: averaging the
    # per-session HREs is not the same as multiplying the averaged pace by
    # the averaged HR, and the rollup does the former
    a = _summary(1, 10.0, 5.0334, 168, month=3)
    b = _summary(1, 10.0, 7.0, 128, month=9)
    assert (a.avg_pace + b.avg_pace) / 2 == pytest.approx(6.0167)
    assert (a.avg_hr + b.avg_hr) / 2 == 148.0
    (row,) = yearly_rollup([a, b])
    mean_of_products = (a.hre + b.hre) / 2
    product_of_means = 6.0167 * 148.0
    assert row.avg_hre == pytest.approx(mean_of_products, abs=1e-9)
    assert abs(row.avg_hre - product_of_means) > 15.0


def test_yearly_min_hre_picks_the_best_session():
    summaries = [
        _summary(1, 10.0, 685.0 / 137.0, 137, month=4),
        _summary(1, 10.0, 790.0 / 158.0, 158, month=7),
        _summary(1, 10.0, 840.0 / 140.0, 140, month=10),
        _summary(1, 2.0, 600.0 / 120.0, 120, month=11),  # short: ignored for min
    ]
    (row,) = yearly_rollup(summaries)
    assert row.min_hre == pytest.approx(685.0, abs=1e-9)


def test_n_copies_average_equals_the_session():
    s = _summary(4, 10.0, 5.41, 141)
    for k in (1, 2, 7, 64):
        (row,) = monthly_rollup([s] * k)
        assert row.session_count == k
        assert row.avg_hre == s.hre
        assert row.avg_pace == s.avg_pace
        assert row.avg_hr == s.avg_hr


def test_merge_refuses_mismatched_periods():
    a = PeriodTotals("2018-08")
    b = PeriodTotals("2018-09")
    with pytest.raises(ValueError):
        a.merge(b)


# ---------------------------------------------------- exactness properties

_summaries_strategy = st.lists(
    st.builds(
        lambda day, dist, pace, hr: SessionSummary(
            date=day,
            distance_km=dist,
            moving_time=pace * dist * 60.0,
            avg_hr=hr,
            avg_pace=pace,
            hre=hr * pace,
            source=MANUAL_SOURCE,
        ),
        day=st.dates(dt.date(2017, 1, 1), dt.date(2019, 12, 31)),
        dist=st.floats(0.5, 60.0, allow_nan=False),
        pace=st.floats(3.0, 12.0, allow_nan=False),
        hr=st.floats(80.0, 200.0, allow_nan=False),
    ),
    min_size=1,
    max_size=30,
)


@settings(max_examples=120, deadline=None)
@given(summaries=_summaries_strategy, seed=st.randoms(use_true_random=False))
def test_rollup_is_permutation_invariant_bit_exact(summaries, seed):
    shuffled = list(summaries)
    seed.shuffle(shuffled)
    for granularity in ("monthly", "yearly"):
        base = finalize_rollup(rollup_state(summaries, 5.0, granularity), granularity)
        perm = finalize_rollup(rollup_state(shuffled, 5.0, granularity), granularity)
        assert base == perm  # dataclass equality, floats bit for bit


@settings(max_examples=120, deadline=None)
@given(summaries=_summaries_strategy, cut=st.integers(0, 30))
def test_rollup_partition_law_bit_exact(summaries, cut):
    # splitting the batch anywhere and merging the partial states gives
    # exactly the rows of the single-pass rollup
    cut = min(cut, len(summaries))
    left, right = summaries[:cut], summaries[cut:]
    merged = merge_rollup_states(
        rollup_state(left, 5.0, "monthly"), rollup_state(right, 5.0, "monthly")
    )
    assert finalize_rollup(merged, "monthly") == finalize_rollup(
        rollup_state(summaries, 5.0, "monthly"), "monthly"
    )


# ------------------------------------------------------------------ export


def test_export_summary_csv_shape():
    s = _summary(4, 12.0, 5.416666666666667, 140)
    text = export([s], "csv").decode()
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_SUMMARY_HEADER)
    assert lines[1] == "2018-08-04,12.00,3900,140,5:25,758,manual-csv"


def test_export_rollup_csv_shape():
    summaries = [
        _summary(4, 10.0, 758.0 / 140.0, 140),
        _summary(11, 12.0, 829.0 / 146.0, 146),
        _summary(18, 11.0, 857.0 / 149.0, 149),
        _summary(25, 9.5, 874.0 / 152.0, 152),
    ]
    text = export(monthly_rollup(summaries), "csv").decode()
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_ROLLUP_HEADER)
    cells = lines[1].split(",")
    assert cells[0] == "2018-08"
    assert cells[1] == "42.50"
    assert cells[2] == "4"
    assert cells[5] == "830"  # 829.5 rounds half-to-even
    assert cells[6] == ""  # monthly rows carry no min


def test_export_empty_list_is_header_only():
    assert export([], "csv").decode().splitlines() == [",".join(CSV_ROLLUP_HEADER)]


def test_export_unknown_format_rejected():
    with pytest.raises(ValueError):
        export([], "xml")


def test_json_export_is_unrounded_and_round_trips():
    summaries = [
        _summary(4, 10.0, 758.0 / 140.0, 140),
        _summary(11, 2.0, 6.0, 130),
    ]
    rows = monthly_rollup(summaries)
    blob = export(rows, "json")
    payload = json.loads(blob)
    assert payload[0]["avg_hre"] == rows[0].avg_hre  # no rounding applied
    assert import_json(blob) == rows

    yearly = yearly_rollup(summaries)
    assert import_json(export(yearly, "json")) == yearly
    assert json.loads(export(yearly, "json"))[0]["avg_monthly_distance_km"] == pytest.approx(1.0)

    assert import_json(export(summaries, "json")) == summaries
