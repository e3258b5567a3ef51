"""Acceptance gate: the seven headline guarantees, one pass/fail line each.

Run with `pytest -v tests/test_acceptance.py`; each criterion prints a
[PASS]/[FAIL] line on the terminal in addition to pytest's own verdict.
"""

import datetime as dt
import io
import random
from contextlib import contextmanager

import pytest
from helpers import TABLE_CSV, poorly_fitted_race, rr_with_breathing, steady_fixture, well_fitted_race
from helpers import roundtrip as decode_fixture

from hrefit import aggregate, metrics
from hrefit.cli import run
from hrefit.fitcodec import (
    ActivityFixture,
    CrcMismatch,
    FixtureSample,
    decode_activity,
    encode_fixture,
    parse_fit,
)
from hrefit.model import MANUAL_SOURCE, SessionSummary, SeriesUnit, TimeSeries

START = dt.datetime(2018, 8, 27, 9, 0, 0, tzinfo=dt.timezone.utc)


@contextmanager
def criterion(capsys, name):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[FAIL] {name}", flush=True)
        raise
    else:
        with capsys.disabled():
            print(f"\n[PASS] {name}", flush=True)


# --------------------------------------------------------------- criterion 1


def test_primary_1_training_log_hre_values(capsys):
    rows = [
        ("5:25", 140, 758),
        ("5:48", 143, 829),
        ("5:50", 147, 857),
        ("6:04", 144, 874),
    ]
    with criterion(capsys, "training-log HRE values 758/829/857/874 within +/-1"):
        for pace_text, hr, expected in rows:
            value = metrics.hre(hr, metrics.parse_pace(pace_text))
            assert abs(value - expected) <= 1.0, (pace_text, hr, value)


# --------------------------------------------------------------- criterion 2


def _random_summaries(rng, max_sessions=8):
    out = []
    for _ in range(rng.randint(1, max_sessions)):
        day = dt.date(2017, 1, 1) + dt.timedelta(days=rng.randint(0, 1095))
        dist = rng.uniform(0.5, 45.0)
        pace = rng.uniform(3.0, 12.0)
        hr = rng.uniform(80.0, 200.0)
        out.append(
            SessionSummary(
                date=day,
                distance_km=dist,
                moving_time=pace * dist * 60.0,
                avg_hr=hr,
                avg_pace=pace,
                hre=hr * pace,
                source=MANUAL_SOURCE,
            )
        )
    return out


def test_primary_2_yearly_mean_semantics_and_partition_law(capsys):
    with criterion(
        capsys, "yearly HRE is the unweighted mean of session HREs; partition law exact"
    ):
        # Averaging a year first and multiplying would give
        # 6.0167 min/km x 148 bpm = 890.5 beats/km, which is not what the
        # statistic means: a yearly summary built from real sessions with
        # those averages reports the mean of the per-session products
        # (about 902 in the motivating case).  The two differ whenever
        # pace and HR vary together, so the aggregator must average the
        # products.
        a = SessionSummary(dt.date(2011, 3, 1), 10.0, 3020.04, 168.0, 5.0334, 845.6112, MANUAL_SOURCE)
        b = SessionSummary(dt.date(2011, 9, 1), 10.0, 4200.0, 128.0, 7.0, 896.0, MANUAL_SOURCE)
        assert (a.avg_pace + b.avg_pace) / 2 == pytest.approx(6.0167)
        assert (a.avg_hr + b.avg_hr) / 2 == 148.0
        (row,) = aggregate.yearly_rollup([a, b])
        mean_of_products = (a.hre + b.hre) / 2
        assert row.avg_hre == pytest.approx(mean_of_products, abs=1e-9)
        assert abs(row.avg_hre - 6.0167 * 148.0) > 15.0

        # partition law, bit-exact over random session sets and split points
        rng = random.Random(20180827)
        for _ in range(500):
            summaries = _random_summaries(rng)
            cut = rng.randint(0, len(summaries))
            for granularity in ("monthly", "yearly"):
                whole = aggregate.finalize_rollup(
                    aggregate.rollup_state(summaries, 5.0, granularity), granularity
                )
                merged = aggregate.finalize_rollup(
                    aggregate.merge_rollup_states(
                        aggregate.rollup_state(summaries[:cut], 5.0, granularity),
                        aggregate.rollup_state(summaries[cut:], 5.0, granularity),
                    ),
                    granularity,
                )
                assert merged == whole


# --------------------------------------------------------------- criterion 3

_LAT_TOL = 1e-6
_ALT_TOL = 0.1001
_DIST_TOL = 0.0051
_SPEED_TOL = 0.00051
_RR_TOL = 0.00051


def _random_fixture(rng):
    n = rng.randint(2, 40)
    has_gps = rng.random() < 0.7
    has_alt = rng.random() < 0.7
    lat0 = rng.uniform(-89.0, 89.0)
    lon0 = rng.uniform(-179.0, 179.0)
    t = 0
    dist = 0.0
    samples = []
    for _ in range(n):
        lat = lon = None
        if has_gps and rng.random() > 0.05:
            lat = max(-89.99, min(89.99, lat0 + rng.uniform(-0.01, 0.01)))
            lon = max(-179.99, min(179.99, lon0 + rng.uniform(-0.01, 0.01)))
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=lat,
                lon=lon,
                altitude=None if not has_alt or rng.random() < 0.05 else rng.uniform(-400.0, 3000.0),
                distance=None if rng.random() < 0.05 else dist,
                speed=None if rng.random() < 0.1 else rng.uniform(0.0, 20.0),
                heart_rate=None if rng.random() < 0.1 else rng.randint(30, 230),
            )
        )
        t += rng.randint(1, 5)
        dist += rng.uniform(0.0, 30.0)
    laps = []
    if n >= 4 and rng.random() < 0.5:
        mid = rng.randint(1, n - 1)
        laps = [(0, mid), (mid, n)]
    rr = None
    if rng.random() < 0.3:
        rr = [rng.uniform(0.3, 1.5) for _ in range(rng.randint(1, 40))]
    return ActivityFixture(start_time=START, samples=samples, laps=laps, rr_intervals=rr)


def _close(a, b, tol):
    if a is None or b is None:
        return a is None and b is None
    return abs(a - b) <= tol


def _assert_roundtrip(fixture):
    activity = decode_activity(parse_fit(encode_fixture(fixture)))
    assert len(activity.samples) == len(fixture.samples)
    for given, got in zip(fixture.samples, activity.samples):
        assert got.t == float(given.elapsed)
        assert _close(given.lat, got.lat, _LAT_TOL)
        assert _close(given.lon, got.lon, _LAT_TOL)
        assert _close(given.altitude, got.altitude, _ALT_TOL)
        assert _close(given.distance, got.distance, _DIST_TOL)
        assert _close(given.speed, got.speed, _SPEED_TOL)
        assert given.heart_rate == got.heart_rate
    assert [(l.start_index, l.end_index) for l in activity.laps] == list(fixture.laps)
    if fixture.rr_intervals is None:
        assert activity.rr is None
    else:
        assert activity.rr is not None
        assert len(activity.rr.intervals) == len(fixture.rr_intervals)
        for given_rr, got_rr in zip(fixture.rr_intervals, activity.rr.intervals):
            assert abs(given_rr - got_rr) <= _RR_TOL


def test_primary_3_codec_roundtrip_and_corruption(capsys):
    with criterion(
        capsys,
        "1,000 random fixtures round-trip within quantization; every single-byte "
        "corruption of a small file's data section raises CrcMismatch",
    ):
        rng = random.Random(0x46495421)
        for _ in range(1000):
            _assert_roundtrip(_random_fixture(rng))

        blob = encode_fixture(steady_fixture(n=25))
        assert len(blob) <= 2048, len(blob)
        header_size = blob[0]
        for i in range(header_size, len(blob) - 2):
            corrupted = bytearray(blob)
            corrupted[i] ^= 0xA5
            with pytest.raises(CrcMismatch):
                parse_fit(bytes(corrupted))


# --------------------------------------------------------------- criterion 4


def test_primary_4_breathing_rate_oracle(capsys):
    with criterion(
        capsys, "planted breathing at 0.20/0.25/0.50/0.80/1.00 Hz recovered within 0.5 breaths/min"
    ):
        from hrefit.model import RRSeries

        for freq in (0.20, 0.25, 0.50, 0.80, 1.00):
            series = metrics.breathing_rate(
                RRSeries.from_raw(rr_with_breathing(freq, duration_s=300.0))
            )
            assert len(series) > 0
            expected = freq * 60.0
            for value in series.v:
                assert abs(value - expected) <= 0.5, (freq, value)


# --------------------------------------------------------------- criterion 5


def test_primary_5_race_shape_classification(capsys):
    with criterion(
        capsys,
        "constant-HRE marathon classifies stable/well_fitted without wall; "
        "late +15% HRE race classifies poorly_fitted with wall",
    ):
        well = decode_fixture(well_fitted_race())
        series = metrics.hre_series(well)
        report = metrics.drift(series)
        assert report.stable is True
        assert report.wall_flag is False
        assert report.mean_hre == pytest.approx(720.0, abs=2.0)
        assert metrics.classify_fitness(report.mean_hre).band.value == "well_fitted"

        poor = decode_fixture(poorly_fitted_race())
        report = metrics.drift(metrics.hre_series(poor))
        assert report.wall_flag is True
        assert report.late_degradation_pct > 8.0
        assert metrics.classify_fitness(report.mean_hre).band.value == "poorly_fitted"


# --------------------------------------------------------------- criterion 6


def test_primary_6_metric_identities(capsys):
    with criterion(
        capsys,
        "scale/range/invariance identities hold over 10^4 random cases each",
    ):
        rng = random.Random(0xB347)

        # hre scales exactly with heart rate when the factor is a power of two
        for _ in range(10_000):
            hr = rng.uniform(30.0, 250.0)
            pace = rng.uniform(2.0, 12.0)
            k = 2.0 ** rng.randint(-3, 6)
            assert metrics.hre(k * hr, pace) == k * metrics.hre(hr, pace)

        # smoothing never leaves the range of the values it saw
        for _ in range(10_000):
            n = rng.randint(1, 25)
            t = tuple(float(i) for i in range(n))
            v = tuple(
                None if rng.random() < 0.1 else rng.uniform(-50.0, 50.0) for i in range(n)
            )
            if all(x is None for x in v):
                continue
            smoothed = metrics.smooth(
                TimeSeries(SeriesUnit.BEATS_PER_KM, t, v), rng.uniform(1.0, 40.0)
            )
            present = [x for x in v if x is not None]
            lo, hi = min(present), max(present)
            for x_in, x_out in zip(v, smoothed.v):
                if x_in is None:
                    assert x_out is None
                else:
                    assert lo <= x_out <= hi

        # drift percentages ignore the series' scale exactly
        for _ in range(10_000):
            n = 40
            span = rng.uniform(1000.0, 1800.0)
            t = tuple(span * i / (n - 1) for i in range(n))
            v = tuple(rng.uniform(400.0, 1200.0) for _ in range(n))
            series = TimeSeries(SeriesUnit.BEATS_PER_KM, t, v)
            k = 2.0 ** rng.randint(-2, 5)
            scaled = TimeSeries(SeriesUnit.BEATS_PER_KM, t, tuple(k * x for x in v))
            one = metrics.drift(series)
            two = metrics.drift(scaled)
            assert one.drift_pct == two.drift_pct
            assert one.stable == two.stable
            assert one.late_degradation_pct == two.late_degradation_pct
            assert one.wall_flag == two.wall_flag

        # a higher mean HRE never earns a better band
        order = {"well_fitted": 0, "intermediate": 1, "poorly_fitted": 2}
        for _ in range(10_000):
            lo, hi = sorted((rng.uniform(300.0, 1200.0), rng.uniform(300.0, 1200.0)))
            assert (
                order[metrics.classify_fitness(lo).band.value]
                <= order[metrics.classify_fitness(hi).band.value]
            )

        # rollups do not care about input order
        for _ in range(10_000):
            summaries = _random_summaries(rng, max_sessions=6)
            shuffled = list(summaries)
            rng.shuffle(shuffled)
            assert aggregate.monthly_rollup(shuffled) == aggregate.monthly_rollup(summaries)


# --------------------------------------------------------------- criterion 7


def test_primary_7_cli_determinism(capsys, tmp_path):
    with criterion(
        capsys, "series and rollup outputs are byte-identical across repeated runs"
    ):
        fit_path = tmp_path / "run.fit"
        fit_path.write_bytes(encode_fixture(steady_fixture(n=900)))
        log_path = tmp_path / "log.csv"
        log_path.write_bytes(TABLE_CSV)

        def call(argv):
            out, err = io.StringIO(), io.StringIO()
            assert run(argv, stdout=out, stderr=err) == 0
            return out.getvalue()

        series_argv = ["series", str(fit_path), "--output", "csv"]
        assert call(series_argv) == call(series_argv)

        rollup_csv = ["rollup", str(tmp_path), "--yearly", "--csv"]
        assert call(rollup_csv) == call(rollup_csv)

        rollup_json = ["rollup", str(tmp_path), "--monthly", "--json"]
        assert call(rollup_json) == call(rollup_json)
