"""Data discovery and loading: FIT trees and manual training-log CSVs.

Manual log rows become degenerate Activities carrying a stored summary and
no samples, so every downstream consumer handles a single type.  Per-file
and per-row failures are collected into a manifest instead of aborting the
whole scan.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from datetime import date as date_type
from datetime import datetime, timezone
from pathlib import Path

from .errors import HrefitError
from .fitcodec import decode_activity, parse_fit_all
from .fitcodec.decode import NoRecords
from .metrics import MalformedPace, parse_pace
from .model import MANUAL_SOURCE, Activity, SessionSummary

HR_MIN = 30.0
HR_MAX = 250.0


class NothingFound(HrefitError):
    """No path yielded a single decodable activity."""

    def __init__(self, message: str, manifest: list["ManifestEntry"] | None = None):
        super().__init__(message)
        self.manifest = manifest or []


class MissingHeader(HrefitError):
    """The CSV lacks the required header row."""


class NoValidRows(HrefitError):
    """Every data row of the CSV was malformed."""


@dataclass(frozen=True)
class ManualLogEntry:
    """One hand-kept training-log row; pace is decimal minutes per km."""

    date: date_type
    distance_km: float
    pace: float
    avg_hr: float
    note: str | None = None


@dataclass(frozen=True)
class RowError:
    """A rejected CSV row: 1-based line number plus the reason."""

    line: int
    message: str


@dataclass(frozen=True)
class ManifestEntry:
    """One per-file (or per-row) problem encountered during a scan."""

    path: str
    error: str
    detail: str

    def to_json(self) -> str:
        return json.dumps(
            {"path": self.path, "error": self.error, "detail": self.detail}
        )


@dataclass(frozen=True)
class ScanResult:
    activities: tuple[Activity, ...]
    manifest: tuple[ManifestEntry, ...]

    def manifest_jsonl(self) -> str:
        return "".join(e.to_json() + "\n" for e in self.manifest)


def _parse_date(text: str, dayfirst: bool) -> date_type:
    s = text.strip()
    if "-" in s:
        return date_type.fromisoformat(s)
    if "/" in s:
        parts = s.split("/")
        if len(parts) != 3:
            raise ValueError(f"unreadable date {text!r}")
        a, b, year = (int(p) for p in parts)
        month, day = (b, a) if dayfirst else (a, b)
        return date_type(year, month, day)
    raise ValueError(f"unreadable date {text!r}")


def _parse_duration_minutes(text: str) -> float:
    """'H:MM:SS', 'M:SS', or decimal minutes."""
    parts = text.strip().split(":")
    if len(parts) == 1:
        value = float(parts[0])
    elif len(parts) == 2:
        m, s = int(parts[0]), float(parts[1])
        if m < 0 or not 0 <= s < 60:
            raise ValueError(f"unreadable duration {text!r}")
        value = m + s / 60.0
    elif len(parts) == 3:
        h, m, s = int(parts[0]), int(parts[1]), float(parts[2])
        if h < 0 or not 0 <= m < 60 or not 0 <= s < 60:
            raise ValueError(f"unreadable duration {text!r}")
        value = h * 60.0 + m + s / 60.0
    else:
        raise ValueError(f"unreadable duration {text!r}")
    if not value > 0:
        raise ValueError(f"duration must be positive, got {text!r}")
    return value


REQUIRED_COLUMNS = ("date", "distance_km", "avg_hr")
OPTIONAL_COLUMNS = ("pace", "duration", "note")


def parse_manual_csv(
    data: bytes, dayfirst: bool = False
) -> tuple[list[ManualLogEntry], list[RowError]]:
    """Parse a manual training log.

    Header names match case-insensitively.  Each row needs exactly one of
    pace or duration; duration divides by distance to give pace.  Malformed
    rows are returned as RowErrors with their line numbers; good rows
    survive.  Slash dates read as M/D/YYYY unless dayfirst.
    """
    text = data.decode("utf-8-sig")
    reader = csv.reader(io.StringIO(text))
    try:
        raw_header = next(reader)
    except StopIteration:
        raise MissingHeader("empty file") from None
    header = [h.strip().lower() for h in raw_header]
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing or ("pace" not in header and "duration" not in header):
        raise MissingHeader(
            f"need columns {', '.join(REQUIRED_COLUMNS)} and pace or duration; "
            f"got {', '.join(header) or 'nothing'}"
        )
    col = {name: header.index(name) for name in header}

    def cell(row: list[str], name: str) -> str:
        idx = col.get(name)
        if idx is None or idx >= len(row):
            return ""
        return row[idx].strip()

    entries: list[ManualLogEntry] = []
    errors: list[RowError] = []
    for line_no, row in enumerate(reader, start=2):
        if not any(c.strip() for c in row):
            continue
        try:
            entry_date = _parse_date(cell(row, "date"), dayfirst)
            distance_km = float(cell(row, "distance_km"))
            if not distance_km > 0:
                raise ValueError(f"distance must be positive, got {distance_km}")
            pace_text = cell(row, "pace")
            duration_text = cell(row, "duration")
            if bool(pace_text) == bool(duration_text):
                raise ValueError("need exactly one of pace or duration")
            if pace_text:
                pace = parse_pace(pace_text)
            else:
                pace = _parse_duration_minutes(duration_text) / distance_km
            avg_hr = float(cell(row, "avg_hr"))
            if not HR_MIN <= avg_hr <= HR_MAX:
                raise ValueError(f"avg_hr {avg_hr} outside {HR_MIN:.0f}..{HR_MAX:.0f}")
            note = cell(row, "note") or None
            entries.append(ManualLogEntry(entry_date, distance_km, pace, avg_hr, note))
        except (ValueError, MalformedPace) as exc:
            errors.append(RowError(line_no, str(exc)))
    if not entries:
        raise NoValidRows(f"no valid rows among {len(errors)}")
    return entries, errors


def manual_entry_to_activity(entry: ManualLogEntry) -> Activity:
    """Wrap a log row as a sampleless Activity with a stored summary.

    The id hashes the row content, so identical rows in different files
    deduplicate and the id is stable across scans.
    """
    canonical = (
        f"{entry.date.isoformat()}|{entry.distance_km!r}|{entry.pace!r}"
        f"|{entry.avg_hr!r}|{entry.note or ''}"
    )
    moving = entry.pace * 60.0 * entry.distance_km
    summary = SessionSummary(
        date=entry.date,
        distance_km=entry.distance_km,
        moving_time=moving,
        avg_hr=entry.avg_hr,
        avg_pace=entry.pace,
        hre=entry.avg_hr * entry.pace,
        source=MANUAL_SOURCE,
    )
    return Activity(
        id=hashlib.sha1(canonical.encode("utf-8")).hexdigest(),
        start_time=datetime(entry.date.year, entry.date.month, entry.date.day, tzinfo=timezone.utc),
        sport="running",
        samples=(),
        source=MANUAL_SOURCE,
        summary=summary,
    )


def _discover(paths: list[str | Path]) -> tuple[list[Path], list[ManifestEntry]]:
    files: list[Path] = []
    manifest: list[ManifestEntry] = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            found = [
                f
                for f in path.rglob("*")
                if f.is_file() and f.suffix.lower() in (".fit", ".csv")
            ]
            files.extend(sorted(found))
        elif path.is_file():
            files.append(path)
        else:
            manifest.append(ManifestEntry(str(path), "NotFound", "path does not exist"))
    return files, manifest


def _load_fit(path: Path) -> tuple[list[Activity], list[ManifestEntry]]:
    data = path.read_bytes()
    content_hash = hashlib.sha1(data).hexdigest()
    blocks = parse_fit_all(data)
    activities: list[Activity] = []
    manifest: list[ManifestEntry] = []
    for i, raw in enumerate(blocks):
        block_id = content_hash if len(blocks) == 1 else f"{content_hash}-{i}"
        try:
            activities.append(decode_activity(raw, activity_id=block_id))
        except NoRecords as exc:
            manifest.append(ManifestEntry(str(path), type(exc).__name__, str(exc)))
    return activities, manifest


def scan(paths: list[str | Path], dayfirst: bool = False) -> ScanResult:
    """Discover and decode *.fit and *.csv under the given paths.

    Activities deduplicate by content-hash id, then by identical
    (start_time, distance) pairs, and come back sorted by start time.
    Raises NothingFound when no file yields an activity; the manifest of
    per-file errors rides on the exception in that case.
    """
    files, manifest = _discover(paths)
    activities: list[Activity] = []
    for path in files:
        try:
            if path.suffix.lower() == ".fit":
                decoded, fit_errors = _load_fit(path)
                activities.extend(decoded)
                manifest.extend(fit_errors)
            else:
                entries, row_errors = parse_manual_csv(path.read_bytes(), dayfirst)
                activities.extend(manual_entry_to_activity(e) for e in entries)
                manifest.extend(
                    ManifestEntry(str(path), "MalformedRow", f"line {e.line}: {e.message}")
                    for e in row_errors
                )
        except HrefitError as exc:
            manifest.append(ManifestEntry(str(path), type(exc).__name__, str(exc)))
        except OSError as exc:
            manifest.append(ManifestEntry(str(path), "ReadError", str(exc)))

    by_id: dict[str, Activity] = {}
    for a in activities:
        by_id.setdefault(a.id, a)
    deduped: list[Activity] = []
    seen_keys: set[tuple] = set()
    for a in by_id.values():
        distance = a.total_distance
        key = (a.start_time, None if distance is None else round(distance, 2))
        if distance is not None and key in seen_keys:
            continue
        seen_keys.add(key)
        deduped.append(a)

    if not deduped:
        raise NothingFound("no decodable activities found", manifest)
    deduped.sort(key=lambda a: (a.start_time, a.id))
    return ScanResult(tuple(deduped), tuple(manifest))
