"""hrefit: FIT decoding and heart-rate-efficiency analytics for running.

HRE (heart rate efficiency) is heart rate times pace: the beats a runner
spends per kilometer.  The package decodes FIT files and manual training
logs, computes HRE at sample, session, monthly, and yearly granularity,
classifies aerobic fitness and intra-race degradation, and serves analyzed
data to a local companion viewer.
"""
from .aggregate import (
    NoHeartRate,
    RollupRow,
    ZeroDistance,
    export,
    monthly_rollup,
    summarize_session,
    yearly_rollup,
)
from .config import CliConfig, load_config
from .errors import HrefitError
from .fitcodec import (
    ActivityFixture,
    CrcMismatch,
    FixtureSample,
    crc16,
    decode_activity,
    encode_fixture,
    parse_fit,
    parse_fit_all,
)
from .ingest import ManualLogEntry, NothingFound, parse_manual_csv, scan
from .metrics import (
    Band,
    DriftReport,
    FitnessBand,
    breathing_rate,
    classify_fitness,
    drift,
    grade_series,
    hre,
    hre_grade_correlation,
    hre_series,
    pace_from_speed,
    parse_pace,
    smooth,
)
from .model import (
    Activity,
    Lap,
    RRSeries,
    Sample,
    SeriesUnit,
    SessionSummary,
    TimeSeries,
    moving_time,
)

__version__ = "0.1.0"

__all__ = [
    "Activity",
    "ActivityFixture",
    "Band",
    "CliConfig",
    "CrcMismatch",
    "DriftReport",
    "FitnessBand",
    "FixtureSample",
    "HrefitError",
    "Lap",
    "ManualLogEntry",
    "NoHeartRate",
    "NothingFound",
    "RRSeries",
    "RollupRow",
    "Sample",
    "SeriesUnit",
    "SessionSummary",
    "TimeSeries",
    "ZeroDistance",
    "breathing_rate",
    "classify_fitness",
    "crc16",
    "decode_activity",
    "drift",
    "encode_fixture",
    "export",
    "grade_series",
    "hre",
    "hre_grade_correlation",
    "hre_series",
    "load_config",
    "monthly_rollup",
    "moving_time",
    "pace_from_speed",
    "parse_fit",
    "parse_fit_all",
    "parse_manual_csv",
    "scan",
    "smooth",
    "summarize_session",
    "yearly_rollup",
    "__version__",
]
