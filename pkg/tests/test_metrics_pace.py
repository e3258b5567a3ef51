"""Pace parsing/formatting and the HRE product."""
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrefit.metrics import (
    MalformedPace,
    NonpositiveInput,
    NonpositiveSpeed,
    format_pace,
    hre,
    pace_from_speed,
    parse_pace,
)

# published example sessions: (pace text, HR, beats/km as printed)
KNOWN_SESSIONS = [
    ("5:25", 140, 758),
    ("5:48", 143, 829),
    ("5:50", 147, 857),
    ("6:04", 144, 874),
]


def test_parse_pace_colon_form():
    assert parse_pace("5:25") == pytest.approx(5 + 25 / 60)
    assert parse_pace(" 6:04 ") == pytest.approx(6 + 4 / 60)
    assert parse_pace("0:45") == pytest.approx(0.75)
    assert parse_pace("10:00") == 10.0


def test_parse_pace_decimal_form():
    assert parse_pace("5.4167") == 5.4167
    assert parse_pace("6") == 6.0


@pytest.mark.parametrize(
    "bad", ["5:75", "5:60", "-5:30", "5:-10", "abc", "", ":", "0", "-4", "5:5:5", "nan", "inf"]
)
def test_parse_pace_rejects(bad):
    with pytest.raises(MalformedPace):
        parse_pace(bad)


def test_format_pace():
    assert format_pace(5 + 25 / 60) == "5:25"
    assert format_pace(6.0167) == "6:01"
    assert format_pace(4.9999) == "5:00"
    assert format_pace(5.0) == "5:00"


@given(st.integers(min_value=0, max_value=59), st.integers(min_value=0, max_value=59))
def test_pace_text_roundtrip(m, s):
    if (m, s) == (0, 0):
        with pytest.raises(MalformedPace):  # zero pace is not a pace
            parse_pace("0:00")
        return
    assert format_pace(parse_pace(f"{m}:{s:02d}")) == f"{m}:{s:02d}"


def test_pace_from_speed():
    assert pace_from_speed(1000.0 / 300.0) == pytest.approx(5.0)
    assert pace_from_speed(1000.0 / 60.0) == pytest.approx(1.0)
    with pytest.raises(NonpositiveSpeed):
        pace_from_speed(0.0)
    with pytest.raises(NonpositiveSpeed):
        pace_from_speed(-2.0)


def test_known_session_hre_values():
    for pace_text, heart_rate, printed in KNOWN_SESSIONS:
        value = hre(heart_rate, parse_pace(pace_text))
        assert abs(value - printed) <= 1.0, (pace_text, heart_rate, value)


def test_hre_requires_positive_inputs():
    with pytest.raises(NonpositiveInput):
        hre(0, 5.0)
    with pytest.raises(NonpositiveInput):
        hre(140, 0.0)
    with pytest.raises(NonpositiveInput):
        hre(-140, 5.0)


@given(
    st.floats(min_value=1.0, max_value=250.0),
    st.floats(min_value=0.1, max_value=60.0),
    st.floats(min_value=0.001, max_value=1000.0),
)
def test_hre_scale_law(heart_rate, pace, c):
    # hre(c*hr, pace) == c*hre(hr, pace) == hre(hr, c*pace)
    base = hre(heart_rate, pace)
    assert hre(c * heart_rate, pace) == pytest.approx(c * base, rel=1e-12)
    assert hre(heart_rate, c * pace) == pytest.approx(c * base, rel=1e-12)


@given(st.floats(min_value=0.01, max_value=65.0))
def test_pace_speed_inverse(speed):
    # pace_from_speed is its own inverse through 1000/(60*v)
    pace = pace_from_speed(speed)
    assert pace_from_speed(1000.0 / (60.0 * pace)) == pytest.approx(pace, rel=1e-12)
    assert math.isclose(pace * 60.0 * speed, 1000.0, rel_tol=1e-12)
