"""Tunable thresholds shared by the CLI and server.

Values load from a `key = value` file and individual command-line flags
override the file.  Every threshold is configurable because the fitness
bands and drift limits are empirical, not physical constants.
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import HrefitError

OUTPUT_FORMATS = ("table", "json", "csv")
PACE_DISPLAYS = ("m:ss", "decimal")


class BadConfig(HrefitError):
    """The config file is unreadable or holds invalid values."""


@dataclass(frozen=True)
class CliConfig:
    smoothing_window: float = 30.0
    min_distance_km: float = 5.0
    stability_pct: float = 5.0
    wall_pct: float = 8.0
    well_fitted_max: float = 750.0
    poorly_fitted_min: float = 800.0
    warmup: float = 300.0
    stop_speed_threshold: float = 0.5
    pace_display: str = "m:ss"
    output: str = "table"
    dayfirst: bool = False

    def validate(self) -> "CliConfig":
        for name in (
            "smoothing_window",
            "min_distance_km",
            "stability_pct",
            "wall_pct",
            "well_fitted_max",
            "poorly_fitted_min",
            "warmup",
        ):
            if not getattr(self, name) > 0:
                raise BadConfig(f"{name} must be positive")
        if self.stop_speed_threshold < 0:
            raise BadConfig("stop_speed_threshold must be non-negative")
        if self.well_fitted_max > self.poorly_fitted_min:
            raise BadConfig("well_fitted_max must not exceed poorly_fitted_min")
        if self.output not in OUTPUT_FORMATS:
            raise BadConfig(f"output must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.pace_display not in PACE_DISPLAYS:
            raise BadConfig(f"pace_display must be one of {', '.join(PACE_DISPLAYS)}")
        return self


_FIELD_TYPES = {f.name: f.type for f in fields(CliConfig)}


def load_config(path: str | Path) -> CliConfig:
    """Read `key = value` lines; '#' starts a comment, blank lines ignored."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BadConfig(f"cannot read config {path}: {exc}") from exc
    values: dict[str, object] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadConfig(f"{path}:{line_no}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in _FIELD_TYPES:
            raise BadConfig(f"{path}:{line_no}: unknown setting {key!r}")
        if key in ("output", "pace_display"):
            values[key] = value.lower()
        elif key == "dayfirst":
            if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise BadConfig(f"{path}:{line_no}: dayfirst must be true or false")
            values[key] = value.lower() in ("true", "1", "yes")
        else:
            try:
                values[key] = float(value)
            except ValueError:
                raise BadConfig(f"{path}:{line_no}: {key} must be a number") from None
    return replace(CliConfig(), **values).validate()


def apply_overrides(config: CliConfig, **overrides: object) -> CliConfig:
    """Apply non-None flag values on top of a loaded config."""
    changes = {k: v for k, v in overrides.items() if v is not None}
    if not changes:
        return config
    return replace(config, **changes).validate()
