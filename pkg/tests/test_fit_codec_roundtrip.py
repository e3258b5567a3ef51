"""Encoder/decoder round-trip: equality within wire quantization bounds."""
import math
from datetime import datetime, timedelta, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hrefit.fitcodec import (
    ActivityFixture,
    FixtureSample,
    ValueOutOfRange,
    decode_activity,
    encode_fixture,
    parse_fit,
)
from hrefit.fitcodec.decode import NoRecords
from hrefit.fitcodec.parse import RawFitFile

from helpers import START, roundtrip, steady_fixture

# wire resolutions
LATLON_TOL = 180.0 / 2**31 + 1e-12
ALT_TOL = 0.1 + 1e-9
DIST_TOL = 0.005 + 1e-9
SPEED_TOL = 0.0005 + 1e-9
RR_TOL = 0.0005 + 1e-9


def assert_matches(fixture: ActivityFixture, check_laps: bool = True):
    activity = roundtrip(fixture)
    assert len(activity.samples) == len(fixture.samples)
    assert activity.start_time == fixture.start_time.replace(microsecond=0)
    for fs, s in zip(fixture.samples, activity.samples):
        assert s.t == float(round(fs.elapsed))
        for name, tol in (
            ("lat", LATLON_TOL),
            ("lon", LATLON_TOL),
            ("altitude", ALT_TOL),
            ("distance", DIST_TOL),
            ("speed", SPEED_TOL),
        ):
            want = getattr(fs, name)
            got = getattr(s, name)
            if want is None:
                assert got is None, f"{name} leaked {got}"
            else:
                assert got is not None, f"{name} lost"
                assert abs(got - want) <= tol, f"{name}: {got} vs {want}"
        assert s.heart_rate == fs.heart_rate
    if check_laps:
        assert tuple((lap.start_index, lap.end_index) for lap in activity.laps) == fixture.laps
    if fixture.rr_intervals:
        assert activity.rr is not None
        assert len(activity.rr.intervals) + len(activity.rr.outliers) == len(
            fixture.rr_intervals
        )
        cleaned = [rr for rr in fixture.rr_intervals if 0.2 < round(rr, 3) < 3.0]
        for got, want in zip(activity.rr.intervals, cleaned):
            assert abs(got - want) <= RR_TOL
    return activity


def test_steady_roundtrip():
    assert_matches(steady_fixture(n=60, with_gps=True, altitude=250.0))


def test_absent_fields_stay_absent():
    fx = steady_fixture(n=30, hr=None, speed=None)
    activity = assert_matches(fx)
    assert all(s.heart_rate is None for s in activity.samples)
    assert all(s.speed is None for s in activity.samples)
    assert all(s.distance is None for s in activity.samples)
    assert all(s.lat is None for s in activity.samples)
    assert all(s.altitude is None for s in activity.samples)


def test_zero_values_differ_from_absent():
    fx = ActivityFixture(
        start_time=START,
        samples=(
            FixtureSample(elapsed=0.0, altitude=0.0, distance=0.0, speed=0.0, heart_rate=40),
            FixtureSample(elapsed=1.0, altitude=None, distance=None, speed=None, heart_rate=None),
        ),
    )
    activity = roundtrip(fx)
    first, second = activity.samples
    assert first.altitude == 0.0
    assert first.distance == 0.0
    assert first.speed == 0.0
    assert second.altitude is None
    assert second.distance is None
    assert second.speed is None
    assert second.heart_rate is None


def test_laps_and_rr_roundtrip():
    fx = steady_fixture(
        n=120,
        laps=((0, 40), (40, 120)),
        rr_intervals=tuple([0.857, 1.0, 0.75] * 20),
    )
    activity = assert_matches(fx)
    assert activity.laps[0].total_time == 39.0
    assert activity.rr is not None
    assert activity.rr.intervals[0] == pytest.approx(0.857, abs=RR_TOL)


def test_rr_outliers_flagged_not_dropped_silently():
    fx = steady_fixture(n=30, rr_intervals=(0.9, 3.5, 1.0, 0.1, 0.8))
    activity = roundtrip(fx)
    assert activity.rr.intervals == pytest.approx((0.9, 1.0, 0.8), abs=RR_TOL)
    assert [pos for pos, _ in activity.rr.outliers] == [1, 3]


def test_sport_decodes():
    assert roundtrip(steady_fixture(n=5)).sport == "running"
    assert roundtrip(steady_fixture(n=5, rr_intervals=())).sport == "running"


def test_activity_id_is_content_deterministic():
    fx = steady_fixture(n=20)
    a = roundtrip(fx)
    b = roundtrip(fx)
    assert a.id == b.id
    c = roundtrip(steady_fixture(n=21))
    assert c.id != a.id


def test_no_records_raises():
    fx = steady_fixture(n=5)
    data = encode_fixture(fx)
    raw = parse_fit(data)
    only_non_records = tuple(m for m in raw.messages if m.global_num != 20)
    gutted = RawFitFile(
        protocol_version=raw.protocol_version,
        profile_version=raw.profile_version,
        data_size=raw.data_size,
        messages=only_non_records,
        header_size=raw.header_size,
        header_crc_ok=raw.header_crc_ok,
        file_crc_ok=raw.file_crc_ok,
    )
    with pytest.raises(NoRecords):
        decode_activity(gutted)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(speed=70.0),
        dict(heart_rate=300),
        dict(altitude=-600.0),
        dict(altitude=13000.0),
        dict(lat=91.0),
        dict(lon=180.0),
        dict(distance=-1.0),
    ],
)
def test_out_of_range_values_rejected(kwargs):
    sample = FixtureSample(elapsed=0.0, **kwargs)
    fx = ActivityFixture(start_time=START, samples=(sample,))
    with pytest.raises(ValueOutOfRange):
        encode_fixture(fx)


def test_subsecond_sample_spacing_rejected():
    fx = ActivityFixture(
        start_time=START,
        samples=(FixtureSample(elapsed=0.0), FixtureSample(elapsed=0.4)),
    )
    with pytest.raises(ValueOutOfRange):
        encode_fixture(fx)


def test_empty_fixture_rejected():
    with pytest.raises(ValueOutOfRange):
        encode_fixture(ActivityFixture(start_time=START, samples=()))


@st.composite
def fixtures(draw):
    n = draw(st.integers(min_value=1, max_value=40))
    start = START + timedelta(seconds=draw(st.integers(0, 10_000_000)))
    gaps = draw(
        st.lists(st.integers(min_value=1, max_value=90), min_size=n - 1, max_size=n - 1)
    )
    elapsed = [0.0]
    for g in gaps:
        elapsed.append(elapsed[-1] + g)

    def maybe(strategy):
        return st.one_of(st.none(), strategy)

    samples = []
    dist = 0.0
    for t in elapsed:
        dist += draw(st.floats(min_value=0.0, max_value=500.0))
        samples.append(
            FixtureSample(
                elapsed=t,
                lat=draw(maybe(st.floats(min_value=-90.0, max_value=90.0))),
                lon=draw(maybe(st.floats(min_value=-179.999, max_value=179.999))),
                altitude=draw(maybe(st.floats(min_value=-499.9, max_value=12000.0))),
                distance=draw(maybe(st.just(dist))),
                speed=draw(maybe(st.floats(min_value=0.0, max_value=65.0))),
                heart_rate=draw(maybe(st.integers(min_value=0, max_value=254))),
            )
        )

    n_laps = draw(st.integers(min_value=0, max_value=3))
    laps = []
    if n_laps and n >= 2:
        cuts = sorted(
            draw(
                st.lists(
                    st.integers(min_value=0, max_value=n),
                    min_size=2 * n_laps,
                    max_size=2 * n_laps,
                )
            )
        )
        for i in range(0, len(cuts) - 1, 2):
            if cuts[i] < cuts[i + 1]:
                laps.append((cuts[i], cuts[i + 1]))

    rr = draw(
        st.one_of(
            st.just(()),
            st.lists(
                st.floats(min_value=0.21, max_value=2.99), min_size=1, max_size=30
            ).map(tuple),
        )
    )
    return ActivityFixture(
        start_time=start, samples=tuple(samples), laps=tuple(laps), rr_intervals=rr
    )


@settings(max_examples=150, deadline=None)
@given(fixtures())
def test_random_fixture_roundtrip(fx):
    assert_matches(fx, check_laps=False)
    activity = roundtrip(fx)
    for (lo, hi) in fx.laps:
        assert any(
            lap.start_index == lo and lap.end_index == hi for lap in activity.laps
        )


@settings(max_examples=60, deadline=None)
@given(fixtures())
def test_random_fixture_decode_is_deterministic(fx):
    data = encode_fixture(fx)
    assert encode_fixture(fx) == data
    a = decode_activity(parse_fit(data))
    b = decode_activity(parse_fit(data))
    assert a == b
