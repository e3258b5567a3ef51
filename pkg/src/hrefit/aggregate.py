"""Session summaries and monthly/yearly rollups.

avg_hre in a rollup row is the unweighted mean of qualifying sessions' own
HRE values.  It is deliberately NOT avg_hr times avg_pace: a year's mean
pace times its mean HR differs from the mean of per-session products
whenever sessions vary, and the per-session mean is the quantity that
tracks fitness.  Accumulation uses exact rational arithmetic so rollups are
independent of input order and of how the input is partitioned.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import date as date_type
from fractions import Fraction

from .errors import HrefitError
from .model import (
    DEFAULT_STOP_SPEED,
    Activity,
    SessionSummary,
    moving_segments,
    moving_time,
)
from .metrics import format_pace

DEFAULT_MIN_DISTANCE_KM = 5.0


class NoHeartRate(HrefitError):
    """The activity has no heart rate data to summarize."""


class ZeroDistance(HrefitError):
    """The activity covers no distance."""


def summarize_session(
    activity: Activity,
    stop_speed_threshold: float = DEFAULT_STOP_SPEED,
) -> SessionSummary:
    """Whole-session distance, moving time, HR, pace, and HRE.

    Manual entries return their stored summary.  For sampled activities,
    avg_hr is the time-weighted mean over moving segments and avg_pace is
    moving time over distance.
    """
    if activity.summary is not None:
        return activity.summary

    distance_m = activity.total_distance
    if distance_m is None or distance_m <= 0:
        raise ZeroDistance(f"activity {activity.id} covers no distance")
    if not any(s.heart_rate for s in activity.samples):
        raise NoHeartRate(f"activity {activity.id} has no heart rate data")

    mt = moving_time(activity, stop_speed_threshold)
    if mt <= 0:
        raise ZeroDistance(f"activity {activity.id} has no moving time")

    hr_weight = 0.0
    hr_sum = 0.0
    for i, j, dt in moving_segments(activity, stop_speed_threshold):
        rates = [
            s.heart_rate
            for s in (activity.samples[i], activity.samples[j])
            if s.heart_rate
        ]
        if not rates:
            continue
        hr_sum += dt * (sum(rates) / len(rates))
        hr_weight += dt
    if hr_weight == 0:
        raise NoHeartRate(f"activity {activity.id} has no heart rate while moving")

    avg_hr = hr_sum / hr_weight
    distance_km = distance_m / 1000.0
    avg_pace = (mt / 60.0) / distance_km
    return SessionSummary(
        date=activity.start_time.date(),
        distance_km=distance_km,
        moving_time=mt,
        avg_hr=avg_hr,
        avg_pace=avg_pace,
        hre=avg_hr * avg_pace,
        source=activity.source,
    )


@dataclass(frozen=True)
class RollupRow:
    """One aggregated period: a calendar month ('2018-08') or year ('2018').

    total_distance_km and session_count cover every session in the period;
    the averages and min_hre cover only qualifying sessions and are None
    when the period has none.  avg_monthly_distance_km is filled for yearly
    rows only.
    """

    period: str
    total_distance_km: float
    session_count: int
    avg_pace: float | None
    avg_hr: float | None
    avg_hre: float | None
    min_hre: float | None = None
    avg_monthly_distance_km: float | None = None


@dataclass
class PeriodTotals:
    """Exact running totals for one period.

    Sums are rational, so accumulation and merging are associative and
    commutative with no float error; rounding happens once, at finalize.
    This is what makes rollups independent of input order and of how a
    batch is split across parallel workers.
    """

    period: str
    distance: Fraction = field(default_factory=lambda: Fraction(0))
    count: int = 0
    qualifying: int = 0
    pace_sum: Fraction = field(default_factory=lambda: Fraction(0))
    hr_sum: Fraction = field(default_factory=lambda: Fraction(0))
    hre_sum: Fraction = field(default_factory=lambda: Fraction(0))
    min_hre: float | None = None

    def add(self, s: SessionSummary, min_distance_km: float) -> None:
        self.distance += Fraction(s.distance_km)
        self.count += 1
        if s.distance_km >= min_distance_km and s.avg_hr:
            self.qualifying += 1
            self.pace_sum += Fraction(s.avg_pace)
            self.hr_sum += Fraction(s.avg_hr)
            self.hre_sum += Fraction(s.hre)
            if self.min_hre is None or s.hre < self.min_hre:
                self.min_hre = s.hre

    def merge(self, other: "PeriodTotals") -> "PeriodTotals":
        if other.period != self.period:
            raise ValueError("cannot merge totals of different periods")
        mins = [m for m in (self.min_hre, other.min_hre) if m is not None]
        return PeriodTotals(
            period=self.period,
            distance=self.distance + other.distance,
            count=self.count + other.count,
            qualifying=self.qualifying + other.qualifying,
            pace_sum=self.pace_sum + other.pace_sum,
            hr_sum=self.hr_sum + other.hr_sum,
            hre_sum=self.hre_sum + other.hre_sum,
            min_hre=min(mins) if mins else None,
        )

    def row(self, yearly: bool) -> RollupRow:
        def mean(total: Fraction) -> float | None:
            if self.qualifying == 0:
                return None
            return float(total / self.qualifying)

        return RollupRow(
            period=self.period,
            total_distance_km=float(self.distance),
            session_count=self.count,
            avg_pace=mean(self.pace_sum),
            avg_hr=mean(self.hr_sum),
            avg_hre=mean(self.hre_sum),
            min_hre=self.min_hre if yearly else None,
            avg_monthly_distance_km=float(self.distance / 12) if yearly else None,
        )


def _period_key(granularity: str):
    if granularity == "monthly":
        return lambda d: f"{d.year:04d}-{d.month:02d}"
    if granularity == "yearly":
        return lambda d: f"{d.year:04d}"
    raise ValueError(f"unknown granularity {granularity!r}")


def rollup_state(
    summaries: list[SessionSummary],
    min_distance_km: float = DEFAULT_MIN_DISTANCE_KM,
    granularity: str = "monthly",
) -> dict[str, PeriodTotals]:
    """Accumulate summaries into exact per-period totals."""
    key = _period_key(granularity)
    periods: dict[str, PeriodTotals] = {}
    for s in summaries:
        period = key(s.date)
        acc = periods.get(period)
        if acc is None:
            acc = periods[period] = PeriodTotals(period)
        acc.add(s, min_distance_km)
    return periods


def merge_rollup_states(
    a: dict[str, PeriodTotals], b: dict[str, PeriodTotals]
) -> dict[str, PeriodTotals]:
    """Combine totals from two disjoint batches of sessions."""
    out = dict(a)
    for period, totals in b.items():
        out[period] = out[period].merge(totals) if period in out else totals
    return out


def finalize_rollup(state: dict[str, PeriodTotals], granularity: str = "monthly") -> list[RollupRow]:
    """Round the exact totals into rows, sorted by period."""
    yearly = granularity == "yearly"
    return [state[p].row(yearly) for p in sorted(state)]


def monthly_rollup(
    summaries: list[SessionSummary],
    min_distance_km: float = DEFAULT_MIN_DISTANCE_KM,
) -> list[RollupRow]:
    """Group summaries by calendar month, sorted by period."""
    return finalize_rollup(rollup_state(summaries, min_distance_km, "monthly"), "monthly")


def yearly_rollup(
    summaries: list[SessionSummary],
    min_distance_km: float = DEFAULT_MIN_DISTANCE_KM,
) -> list[RollupRow]:
    """Group summaries by calendar year; adds min and per-month distance."""
    return finalize_rollup(rollup_state(summaries, min_distance_km, "yearly"), "yearly")


CSV_ROLLUP_HEADER = (
    "period",
    "total_distance_km",
    "session_count",
    "avg_pace",
    "avg_hr",
    "avg_hre",
    "min_hre",
)
CSV_SUMMARY_HEADER = ("date", "distance_km", "moving_time", "avg_hr", "avg_pace", "hre", "source")


def _round_int(value: float | None) -> str:
    return "" if value is None else str(round(value))


def export(rows: list[RollupRow] | list[SessionSummary], format: str = "csv") -> bytes:
    """Serialize rollup rows or session summaries.

    CSV uses a fixed header order with pace as M:SS and HRE as an integer;
    JSON carries the raw unrounded values.
    """
    if format == "json":
        payload = []
        for r in rows:
            if isinstance(r, RollupRow):
                d = {
                    "period": r.period,
                    "total_distance_km": r.total_distance_km,
                    "session_count": r.session_count,
                    "avg_pace": r.avg_pace,
                    "avg_hr": r.avg_hr,
                    "avg_hre": r.avg_hre,
                    "min_hre": r.min_hre,
                }
                if r.avg_monthly_distance_km is not None:
                    d["avg_monthly_distance_km"] = r.avg_monthly_distance_km
            else:
                d = {
                    "date": r.date.isoformat(),
                    "distance_km": r.distance_km,
                    "moving_time": r.moving_time,
                    "avg_hr": r.avg_hr,
                    "avg_pace": r.avg_pace,
                    "hre": r.hre,
                    "source": r.source,
                }
            payload.append(d)
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")

    if format != "csv":
        raise ValueError(f"unknown export format {format!r}")

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if rows and isinstance(rows[0], SessionSummary):
        writer.writerow(CSV_SUMMARY_HEADER)
        for r in rows:
            writer.writerow(
                (
                    r.date.isoformat(),
                    f"{r.distance_km:.2f}",
                    f"{r.moving_time:.0f}",
                    _round_int(r.avg_hr),
                    format_pace(r.avg_pace),
                    _round_int(r.hre),
                    r.source,
                )
            )
    else:
        writer.writerow(CSV_ROLLUP_HEADER)
        for r in rows:
            writer.writerow(
                (
                    r.period,
                    f"{r.total_distance_km:.2f}",
                    str(r.session_count),
                    "" if r.avg_pace is None else format_pace(r.avg_pace),
                    _round_int(r.avg_hr),
                    _round_int(r.avg_hre),
                    _round_int(r.min_hre),
                )
            )
    return out.getvalue().encode("utf-8")


def import_json(data: bytes) -> list[RollupRow] | list[SessionSummary]:
    """Inverse of the JSON export, for round-trip checks."""
    payload = json.loads(data.decode("utf-8"))
    rows: list = []
    for d in payload:
        if "period" in d:
            rows.append(
                RollupRow(
                    period=d["period"],
                    total_distance_km=d["total_distance_km"],
                    session_count=d["session_count"],
                    avg_pace=d["avg_pace"],
                    avg_hr=d["avg_hr"],
                    avg_hre=d["avg_hre"],
                    min_hre=d.get("min_hre"),
                    avg_monthly_distance_km=d.get("avg_monthly_distance_km"),
                )
            )
        else:
            rows.append(
                SessionSummary(
                    date=date_type.fromisoformat(d["date"]),
                    distance_km=d["distance_km"],
                    moving_time=d["moving_time"],
                    avg_hr=d["avg_hr"],
                    avg_pace=d["avg_pace"],
                    hre=d["hre"],
                    source=d["source"],
                )
            )
    return rows
