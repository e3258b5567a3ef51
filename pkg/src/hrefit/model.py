"""Core data model: activity samples, laps, RR series, summaries, time series.

All containers are frozen dataclasses. Absent sensor values are represented
as None, never as zero or a sentinel number.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import date as date_type
from datetime import datetime
from typing import Iterator

from .errors import HrefitError


class TooFewSamples(HrefitError):
    """Raised when an operation needs at least two samples."""


# Sources recorded on Activity / SessionSummary.
FIT_SOURCE = "fit-file"
MANUAL_SOURCE = "manual-csv"

# Physiologically plausible RR interval range, seconds.  Values outside are
# dropped from the usable series and kept aside as flagged outliers.
RR_MIN_S = 0.2
RR_MAX_S = 3.0

# A segment slower than this is treated as standing still.
DEFAULT_STOP_SPEED = 0.5  # m/s
# Recording gaps longer than this are excluded from moving time entirely.
MAX_SEGMENT_GAP = 30.0  # s


class SeriesUnit(str, enum.Enum):
    """Unit tag carried by every TimeSeries."""

    BEATS_PER_KM = "beats/km"
    BPM = "bpm"
    MIN_PER_KM = "min/km"
    BREATHS_PER_MIN = "breaths/min"
    METERS = "m"
    GRADE = "grade"


@dataclass(frozen=True)
class Sample:
    """One recorded instant of an activity.

    t is seconds since activity start; timestamp is the absolute UTC time.
    distance is cumulative meters from the start.  Any sensor field may be
    None when the device did not report it.
    """

    t: float
    timestamp: datetime
    lat: float | None = None
    lon: float | None = None
    altitude: float | None = None
    distance: float | None = None
    speed: float | None = None
    heart_rate: int | None = None


@dataclass(frozen=True)
class Lap:
    """A device-recorded lap, referencing the sample array by index.

    end_index is exclusive, so samples[start_index:end_index] is the lap.
    """

    start_index: int
    end_index: int
    total_time: float
    total_distance: float | None = None
    avg_heart_rate: float | None = None
    avg_speed: float | None = None


@dataclass(frozen=True)
class RRSeries:
    """Beat-to-beat interval series in seconds, already range-cleaned.

    outliers holds (position_in_raw_stream, value) pairs that were dropped.
    """

    intervals: tuple[float, ...]
    outliers: tuple[tuple[int, float], ...] = ()

    @classmethod
    def from_raw(cls, raw: list[float] | tuple[float, ...]) -> "RRSeries":
        kept: list[float] = []
        flagged: list[tuple[int, float]] = []
        for i, rr in enumerate(raw):
            if RR_MIN_S < rr < RR_MAX_S:
                kept.append(float(rr))
            else:
                flagged.append((i, float(rr)))
        return cls(tuple(kept), tuple(flagged))

    @property
    def duration(self) -> float:
        return float(sum(self.intervals))


@dataclass(frozen=True)
class SessionSummary:
    """Whole-session figures used for reporting and rollups.

    avg_pace is decimal minutes per kilometer; hre is beats per kilometer.
    """

    date: date_type
    distance_km: float
    moving_time: float
    avg_hr: float
    avg_pace: float
    hre: float
    source: str = FIT_SOURCE


@dataclass(frozen=True)
class Activity:
    """A decoded workout.

    FIT-derived activities carry samples (and optionally laps and an RR
    series).  Manual log entries carry an empty sample tuple and a stored
    summary instead.
    """

    id: str
    start_time: datetime
    sport: str
    samples: tuple[Sample, ...]
    laps: tuple[Lap, ...] = ()
    rr: RRSeries | None = None
    source: str = FIT_SOURCE
    summary: SessionSummary | None = None

    @property
    def total_distance(self) -> float | None:
        """Last reported cumulative distance in meters, if any."""
        for s in reversed(self.samples):
            if s.distance is not None:
                return s.distance
        if self.summary is not None:
            return self.summary.distance_km * 1000.0
        return None


@dataclass(frozen=True)
class TimeSeries:
    """A derived series on the activity clock.

    t is strictly increasing seconds since start; v holds one value or None
    per instant.  The two tuples always have equal length.
    """

    unit: SeriesUnit
    t: tuple[float, ...]
    v: tuple[float | None, ...]

    def __post_init__(self) -> None:
        if len(self.t) != len(self.v):
            raise ValueError("t and v must have equal length")
        for a, b in zip(self.t, self.t[1:]):
            if not b > a:
                raise ValueError("t must be strictly increasing")

    def __len__(self) -> int:
        return len(self.t)

    @property
    def span(self) -> float:
        """Seconds between first and last instant (0 for singletons)."""
        if not self.t:
            return 0.0
        return self.t[-1] - self.t[0]

    def present(self) -> Iterator[tuple[float, float]]:
        """Yield (t, v) pairs where v is not None."""
        for tt, vv in zip(self.t, self.v):
            if vv is not None:
                yield tt, vv


def _segment_speed(a: Sample, b: Sample, dt: float) -> float | None:
    """Speed over the segment a->b, preferring the distance delta."""
    if a.distance is not None and b.distance is not None:
        return (b.distance - a.distance) / dt
    speeds = [s.speed for s in (a, b) if s.speed is not None]
    if speeds:
        return sum(speeds) / len(speeds)
    return None


def moving_segments(
    activity: Activity,
    stop_speed_threshold: float = DEFAULT_STOP_SPEED,
) -> Iterator[tuple[int, int, float]]:
    """Yield (i, i+1, dt) for consecutive sample pairs that count as moving.

    A pair is excluded when the gap exceeds MAX_SEGMENT_GAP (treated as a
    recording pause) or its speed falls below the threshold.  Pairs whose
    speed cannot be determined at all are kept: lack of sensors is not
    evidence of standing still.
    """
    samples = activity.samples
    for i in range(len(samples) - 1):
        a, b = samples[i], samples[i + 1]
        dt = b.t - a.t
        if dt <= 0 or dt > MAX_SEGMENT_GAP:
            continue
        v = _segment_speed(a, b, dt)
        if v is not None and v < stop_speed_threshold:
            continue
        yield i, i + 1, dt


def moving_time(
    activity: Activity,
    stop_speed_threshold: float = DEFAULT_STOP_SPEED,
) -> float:
    """Seconds spent moving, excluding pauses and near-zero-speed segments."""
    if len(activity.samples) < 2:
        raise TooFewSamples("moving time needs at least two samples")
    return sum(dt for _, _, dt in moving_segments(activity, stop_speed_threshold))
