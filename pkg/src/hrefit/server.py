"""Read-only local HTTP service for the companion viewer.

Activities load once at startup; every request computes from that immutable
store, so identical requests give identical responses.  All series math
runs server-side: the viewer's smoothing slider round-trips through the
window query parameter rather than re-implementing the smoothing.
"""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import aggregate, metrics
from .config import CliConfig
from .errors import HrefitError
from .model import Activity

# Companion viewer build output, served at / when present.
STATIC_DIR = Path(__file__).resolve().parent / "static"

LOOPBACK_ORIGIN_REGEX = r"http://(localhost|127\.0\.0\.1)(:\d+)?"


def _summary_json(s) -> dict:
    return {
        "date": s.date.isoformat(),
        "distance_km": s.distance_km,
        "moving_time": s.moving_time,
        "avg_hr": s.avg_hr,
        "avg_pace": s.avg_pace,
        "hre": s.hre,
        "source": s.source,
    }


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


def _bundle(activity: Activity, window: float, config: CliConfig) -> dict:
    """Everything the viewer needs for one activity, absent values as null."""
    samples = activity.samples
    pace = [
        None if s.speed is None or s.speed <= 0 else metrics.pace_from_speed(s.speed)
        for s in samples
    ]
    try:
        hre_v = list(
            metrics.hre_series(activity, window, config.stop_speed_threshold).v
        )
    except HrefitError:
        hre_v = [None] * len(samples)

    try:
        grade_v = list(metrics.grade_series(activity, window).v)
    except HrefitError:
        grade_v = [None] * len(samples)

    try:
        summary = _summary_json(
            aggregate.summarize_session(activity, config.stop_speed_threshold)
        )
    except HrefitError:
        summary = None

    drift_payload = None
    fitness_payload = None
    try:
        series = metrics.hre_series(activity, window, config.stop_speed_threshold)
        report = metrics.drift(
            series, config.warmup, config.stability_pct, config.wall_pct
        )
        drift_payload = _drift_json(report)
        mean_hre = report.mean_hre
    except HrefitError:
        mean_hre = None
        if summary is not None:
            mean_hre = summary["hre"]
    if mean_hre is not None:
        band = metrics.classify_fitness(
            mean_hre, config.well_fitted_max, config.poorly_fitted_min
        )
        fitness_payload = {"band": band.band.value, "mean_hre": band.mean_hre}

    return {
        "id": activity.id,
        "start_time": activity.start_time.isoformat(),
        "sport": activity.sport,
        "summary": summary,
        "samples": {
            "t": [s.t for s in samples],
            "distance": [s.distance for s in samples],
            "lat": [s.lat for s in samples],
            "lon": [s.lon for s in samples],
            "altitude": [s.altitude for s in samples],
            "hr": [s.heart_rate for s in samples],
            "pace": pace,
            "hre": hre_v,
            "grade": grade_v,
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
        "drift": drift_payload,
        "fitness": fitness_payload,
        "has_rr": activity.rr is not None,
    }


def _parse_window(window: str | None, default: float) -> float:
    if window is None:
        return default
    try:
        value = float(window)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"malformed window {window!r}") from None
    if not value > 0:
        raise HTTPException(status_code=400, detail="window must be positive")
    return value


def build_app(activities: Sequence[Activity], config: CliConfig | None = None) -> FastAPI:
    """Assemble the service around an immutable activity store."""
    cfg = config if config is not None else CliConfig()
    store: dict[str, Activity] = {a.id: a for a in activities}
    ordered = sorted(store.values(), key=lambda a: (a.start_time, a.id))

    app = FastAPI(title="hrefit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=LOOPBACK_ORIGIN_REGEX,
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def _get_activity(activity_id: str) -> Activity:
        activity = store.get(activity_id)
        if activity is None:
            raise HTTPException(status_code=404, detail=f"no activity {activity_id!r}")
        return activity

    @app.get("/api/activities")
    def list_activities() -> list[dict]:
        out = []
        for a in ordered:
            entry = {
                "id": a.id,
                "start_time": a.start_time.isoformat(),
                "sport": a.sport,
                "distance_km": None,
                "hre": None,
                "band": None,
            }
            try:
                s = aggregate.summarize_session(a, cfg.stop_speed_threshold)
                entry["distance_km"] = s.distance_km
                entry["hre"] = s.hre
                entry["band"] = metrics.classify_fitness(
                    s.hre, cfg.well_fitted_max, cfg.poorly_fitted_min
                ).band.value
            except HrefitError:
                pass
            out.append(entry)
        return out

    @app.get("/api/activities/{activity_id}")
    def activity_bundle(activity_id: str, window: str | None = Query(default=None)) -> dict:
        activity = _get_activity(activity_id)
        return _bundle(activity, _parse_window(window, cfg.smoothing_window), cfg)

    @app.get("/api/activities/{activity_id}/breathing")
    def activity_breathing(activity_id: str) -> dict:
        activity = _get_activity(activity_id)
        if activity.rr is None:
            raise HTTPException(status_code=404, detail="activity has no RR data")
        try:
            series = metrics.breathing_rate(activity.rr)
        except HrefitError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {
            "unit": series.unit.value,
            "t": list(series.t),
            "v": list(series.v),
        }

    @app.get("/api/rollup")
    def rollup(granularity: str = "monthly") -> list[dict]:
        if granularity not in ("monthly", "yearly"):
            raise HTTPException(status_code=400, detail="granularity must be monthly or yearly")
        summaries = []
        for a in ordered:
            try:
                summaries.append(aggregate.summarize_session(a, cfg.stop_speed_threshold))
            except HrefitError:
                continue
        roll = (
            aggregate.yearly_rollup if granularity == "yearly" else aggregate.monthly_rollup
        )
        rows = roll(summaries, cfg.min_distance_km)
        return [
            {
                "period": r.period,
                "total_distance_km": r.total_distance_km,
                "session_count": r.session_count,
                "avg_pace": r.avg_pace,
                "avg_hr": r.avg_hr,
                "avg_hre": r.avg_hre,
                "min_hre": r.min_hre,
                "avg_monthly_distance_km": r.avg_monthly_distance_km,
            }
            for r in rows
        ]

    if STATIC_DIR.is_dir():
        app.mount("/", StaticFiles(directory=STATIC_DIR, html=True), name="viewer")
    else:

        @app.get("/")
        def index() -> Response:
            return Response(
                "hrefit service is running; the viewer bundle is not installed.\n",
                media_type="text/plain",
            )

    return app
