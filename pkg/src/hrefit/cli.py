"""Command-line interface.

Subcommands: parse, summary, series, classify, rollup, serve.  Exit codes:
0 success, 1 usage error, 2 data error.  Output formatting is fixed-width
and deterministic: identical inputs and flags give byte-identical output.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from bisect import bisect_left
from pathlib import Path
from typing import IO

from . import aggregate, metrics
from .config import CliConfig, apply_overrides, load_config
from .errors import HrefitError
from .fitcodec import decode_activity, parse_fit_all
from .ingest import scan
from .model import Activity, TimeSeries

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this surface reserves 2
    # for data errors, so route usage problems through our own handler.
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="hrefit", description="Heart-rate-efficiency toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--config", help="key = value settings file")

    p = sub.add_parser("parse", help="decode a FIT file and print it as JSON")
    common(p)
    p.add_argument("file")

    p = sub.add_parser("summary", help="per-session summary table")
    common(p)
    p.add_argument("paths", nargs="+")
    p.add_argument("--output", choices=("table", "csv", "json"))
    p.add_argument("--dayfirst", action="store_const", const=True, default=None,
                   help="read slash dates as D/M/YYYY")

    p = sub.add_parser("series", help="per-sample HR, pace, HRE, grade, breathing")
    common(p)
    p.add_argument("file")
    p.add_argument("--window", type=float, help="smoothing window, seconds")
    p.add_argument("--by", choices=("time", "distance"), default="time")
    p.add_argument("--output", choices=("table", "csv"))

    p = sub.add_parser("classify", help="drift and fitness band as JSON")
    common(p)
    p.add_argument("file")
    p.add_argument("--window", type=float, help="smoothing window, seconds")

    p = sub.add_parser("rollup", help="monthly or yearly training totals")
    common(p)
    p.add_argument("paths", nargs="+")
    grain = p.add_mutually_exclusive_group()
    grain.add_argument("--monthly", action="store_true")
    grain.add_argument("--yearly", action="store_true")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--min-distance", type=float, dest="min_distance",
                   help="qualifying session distance, km")
    p.add_argument("--dayfirst", action="store_const", const=True, default=None)

    p = sub.add_parser("serve", help="serve activities over local HTTP")
    common(p)
    p.add_argument("paths", nargs="+")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--dayfirst", action="store_const", const=True, default=None)

    return parser


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    config = load_config(args.config) if args.config else CliConfig()
    return apply_overrides(
        config,
        smoothing_window=getattr(args, "window", None),
        output=getattr(args, "output", None),
        min_distance_km=getattr(args, "min_distance", None),
        dayfirst=getattr(args, "dayfirst", None),
    )


def _fmt4(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"


def _fmt_duration(seconds: float) -> str:
    total = round(seconds)
    h, rest = divmod(total, 3600)
    m, s = divmod(rest, 60)
    if h:
        return f"{h}:{m:02d}:{s:02d}"
    return f"{m}:{s:02d}"


def _load_single_fit(path: str) -> list[Activity]:
    data = Path(path).read_bytes()
    blocks = parse_fit_all(data)
    content_hash = hashlib.sha1(data).hexdigest()
    out = []
    for i, raw in enumerate(blocks):
        block_id = content_hash if len(blocks) == 1 else f"{content_hash}-{i}"
        out.append(decode_activity(raw, activity_id=block_id))
    return out


def _activity_json(activity: Activity) -> dict:
    samples = activity.samples
    return {
        "id": activity.id,
        "start_time": activity.start_time.isoformat(),
        "sport": activity.sport,
        "source": activity.source,
        "sample_count": len(samples),
        "samples": {
            "t": [s.t for s in samples],
            "lat": [s.lat for s in samples],
            "lon": [s.lon for s in samples],
            "altitude": [s.altitude for s in samples],
            "distance": [s.distance for s in samples],
            "speed": [s.speed for s in samples],
            "heart_rate": [s.heart_rate for s in samples],
        },
        "laps": [
            {
                "start_index": lap.start_index,
                "end_index": lap.end_index,
                "total_time": lap.total_time,
                "total_distance": lap.total_distance,
                "avg_heart_rate": lap.avg_heart_rate,
                "avg_speed": lap.avg_speed,
            }
            for lap in activity.laps
        ],
        "rr_count": 0 if activity.rr is None else len(activity.rr.intervals),
    }


def _cmd_parse(args: argparse.Namespace, out: IO[str]) -> int:
    activities = _load_single_fit(args.file)
    payload = [_activity_json(a) for a in activities]
    out.write(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_summary(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    config = _resolve_config(args)
    result = scan(args.paths, dayfirst=config.dayfirst)
    summaries = []
    for activity in result.activities:
        try:
            summaries.append(
                aggregate.summarize_session(activity, config.stop_speed_threshold)
            )
        except HrefitError as exc:
            err.write(f"skipping {activity.id}: {exc}\n")
    for entry in result.manifest:
        err.write(f"note: {entry.path}: {entry.error}: {entry.detail}\n")
    if not summaries:
        raise HrefitError("no activity could be summarized")
    if config.output in ("csv", "json"):
        out.write(aggregate.export(summaries, config.output).decode("utf-8"))
        return EXIT_OK
    out.write(f"{'date':<12}{'km':>8}{'time':>10}{'pace':>7}{'hr':>5}{'hre':>6}  source\n")
    for s in summaries:
        out.write(
            f"{s.date.isoformat():<12}{s.distance_km:>8.2f}{_fmt_duration(s.moving_time):>10}"
            f"{metrics.format_pace(s.avg_pace):>7}{round(s.avg_hr):>5}{round(s.hre):>6}"
            f"  {s.source}\n"
        )
    return EXIT_OK


def _nearest_lookup(series: TimeSeries | None, t: float, tolerance: float) -> float | None:
    """Value at the series instant nearest t, if within tolerance."""
    if series is None or len(series) == 0:
        return None
    idx = bisect_left(series.t, t)
    best = None
    for j in (idx - 1, idx):
        if 0 <= j < len(series.t):
            d = abs(series.t[j] - t)
            if d <= tolerance and (best is None or d < best[0]):
                best = (d, series.v[j])
    return None if best is None else best[1]


def _series_rows(activity: Activity, config: CliConfig, by: str) -> list[tuple]:
    try:
        hre_s = metrics.hre_series(
            activity, config.smoothing_window, config.stop_speed_threshold
        )
    except HrefitError:
        hre_s = None
    try:
        grade_s = metrics.grade_series(activity, config.smoothing_window)
    except HrefitError:
        grade_s = None
    breathing_s = None
    if activity.rr is not None:
        try:
            breathing_s = metrics.breathing_rate(activity.rr)
        except HrefitError:
            breathing_s = None

    rows = []
    for i, s in enumerate(activity.samples):
        if by == "distance":
            if s.distance is None:
                continue
            x = s.distance / 1000.0
        else:
            x = s.t
        pace = None
        if s.speed is not None and s.speed > 0:
            pace = metrics.pace_from_speed(s.speed)
        rows.append(
            (
                x,
                s.heart_rate,
                pace,
                None if hre_s is None else hre_s.v[i],
                None if grade_s is None else grade_s.v[i],
                _nearest_lookup(breathing_s, s.t, metrics.BREATHING_STEP),
            )
        )
    return rows


def _cmd_series(args: argparse.Namespace, out: IO[str]) -> int:
    config = _resolve_config(args)
    activities = _load_single_fit(args.file)
    activity = activities[0]
    rows = _series_rows(activity, config, args.by)
    x_label = "distance_km" if args.by == "distance" else "t_s"
    header = (x_label, "hr", "pace_min_km", "hre", "grade", "breathing")
    if config.output == "table":
        widths = (12, 6, 12, 10, 9, 10)
        out.write("".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for row in rows:
            cells = (
                _fmt4(row[0]),
                "" if row[1] is None else str(row[1]),
                _fmt4(row[2]),
                _fmt4(row[3]),
                _fmt4(row[4]),
                _fmt4(row[5]),
            )
            out.write("".join(c.rjust(w) for c, w in zip(cells, widths)) + "\n")
    else:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(
                ",".join(
                    (
                        _fmt4(row[0]),
                        "" if row[1] is None else str(row[1]),
                        _fmt4(row[2]),
                        _fmt4(row[3]),
                        _fmt4(row[4]),
                        _fmt4(row[5]),
                    )
                )
                + "\n"
            )
    return EXIT_OK


def _drift_json(report: metrics.DriftReport) -> dict:
    return {
        "warmup_excluded": report.warmup_excluded,
        "mean_hre": report.mean_hre,
        "slope": report.slope,
        "drift_pct": report.drift_pct,
        "stable": report.stable,
        "late_degradation_pct": report.late_degradation_pct,
        "wall_flag": report.wall_flag,
    }


def _cmd_classify(args: argparse.Namespace, out: IO[str]) -> int:
    config = _resolve_config(args)
    activity = _load_single_fit(args.file)[0]
    series = metrics.hre_series(
        activity, config.smoothing_window, config.stop_speed_threshold
    )
    report = metrics.drift(
        series, config.warmup, config.stability_pct, config.wall_pct
    )
    fitness = metrics.classify_fitness(
        report.mean_hre, config.well_fitted_max, config.poorly_fitted_min
    )
    payload = {
        "drift": _drift_json(report),
        "fitness": {"band": fitness.band.value, "mean_hre": fitness.mean_hre},
    }
    out.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_rollup(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    config = _resolve_config(args)
    result = scan(args.paths, dayfirst=config.dayfirst)
    summaries = []
    for activity in result.activities:
        try:
            summaries.append(
                aggregate.summarize_session(activity, config.stop_speed_threshold)
            )
        except HrefitError as exc:
            err.write(f"skipping {activity.id}: {exc}\n")
    rollup = aggregate.yearly_rollup if args.yearly else aggregate.monthly_rollup
    rows = rollup(summaries, config.min_distance_km)
    fmt = "csv" if args.csv else "json" if args.json else config.output
    if fmt in ("csv", "json"):
        out.write(aggregate.export(rows, fmt).decode("utf-8"))
        return EXIT_OK
    out.write(f"{'period':<9}{'km':>9}{'runs':>6}{'pace':>7}{'hr':>5}{'hre':>6}{'min':>6}\n")
    for r in rows:
        out.write(
            f"{r.period:<9}{r.total_distance_km:>9.2f}{r.session_count:>6}"
            f"{'' if r.avg_pace is None else metrics.format_pace(r.avg_pace):>7}"
            f"{'' if r.avg_hr is None else round(r.avg_hr):>5}"
            f"{'' if r.avg_hre is None else round(r.avg_hre):>6}"
            f"{'' if r.min_hre is None else round(r.min_hre):>6}\n"
        )
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace, err: IO[str]) -> int:
    import uvicorn

    from .server import build_app

    config = _resolve_config(args)
    result = scan(args.paths, dayfirst=config.dayfirst)
    for entry in result.manifest:
        err.write(f"note: {entry.path}: {entry.error}: {entry.detail}\n")
    app = build_app(result.activities, config)
    err.write(
        f"serving {len(result.activities)} activities on "
        f"http://{args.host}:{args.port}\n"
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def run(
    argv: list[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(str(exc) + "\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        if args.command == "parse":
            return _cmd_parse(args, out)
        if args.command == "summary":
            return _cmd_summary(args, out, err)
        if args.command == "series":
            return _cmd_series(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "rollup":
            return _cmd_rollup(args, out, err)
        if args.command == "serve":
            return _cmd_serve(args, err)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        err.write(str(exc) + "\n")
        return EXIT_USAGE
    except HrefitError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
