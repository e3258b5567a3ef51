"""Manual-log CSV parsing and filesystem scanning."""

import datetime as dt
import json

import pytest
from helpers import TABLE_CSV, steady_fixture

from hrefit.fitcodec import encode_fixture
from hrefit.ingest import (
    ManifestEntry,
    MissingHeader,
    NothingFound,
    NoValidRows,
    manual_entry_to_activity,
    parse_manual_csv,
    scan,
)
from hrefit.model import MANUAL_SOURCE


# ----------------------------------------------------------------- csv rows


def test_training_log_rows_parse():
    entries, errors = parse_manual_csv(TABLE_CSV)
    assert errors == []
    assert len(entries) == 4
    first = entries[0]
    assert first.date == dt.date(2018, 8, 27)
    assert first.distance_km == 15.7
    assert first.pace == pytest.approx(5.0 + 25.0 / 60.0)
    assert first.avg_hr == 140.0
    assert first.note == "tempo"
    assert entries[1].note is None


def test_bad_pace_rejected_with_line_number_others_survive():
    data = (
        b"date,distance_km,pace,avg_hr\n"
        b"2018-08-27,15.7,5:25,140\n"
        b"2018-09-02,21.2,5:75,143\n"
        b"2018-09-09,15.4,5:50,147\n"
    )
    entries, errors = parse_manual_csv(data)
    assert [e.date.day for e in entries] == [27, 9]
    assert len(errors) == 1
    assert errors[0].line == 3
    assert "5:75" in errors[0].message


def test_empty_file_is_missing_header():
    with pytest.raises(MissingHeader):
        parse_manual_csv(b"")


def test_header_without_required_column():
    with pytest.raises(MissingHeader):
        parse_manual_csv(b"date,distance_km,pace\n2018-08-27,15.7,5:25\n")
    with pytest.raises(MissingHeader):
        parse_manual_csv(b"date,distance_km,avg_hr\n2018-08-27,15.7,140\n")


def test_header_matches_case_insensitively_and_skips_bom():
    data = b"\xef\xbb\xbfDATE,Distance_km,PACE,Avg_HR\n2018-08-27,10,5:00,140\n"
    entries, errors = parse_manual_csv(data)
    assert len(entries) == 1 and errors == []


def test_all_rows_bad_raises():
    data = b"date,distance_km,pace,avg_hr\n2018-08-27,-3,5:25,140\n"
    with pytest.raises(NoValidRows):
        parse_manual_csv(data)


def test_slash_dates_flip_with_dayfirst():
    data = b"date,distance_km,pace,avg_hr\n3/4/2018,10,5:00,140\n"
    (us,), _ = parse_manual_csv(data)
    (eu,), _ = parse_manual_csv(data, dayfirst=True)
    assert us.date == dt.date(2018, 3, 4)
    assert eu.date == dt.date(2018, 4, 3)


def test_duration_column_divides_by_distance():
    data = b"date,distance_km,duration,avg_hr\n2018-08-27,10,55:00,140\n"
    (entry,), _ = parse_manual_csv(data)
    assert entry.pace == pytest.approx(5.5)

    data = b"date,distance_km,duration,avg_hr\n2018-08-27,12,1:06:00,140\n"
    (entry,), _ = parse_manual_csv(data)
    assert entry.pace == pytest.approx(5.5)

    data = b"date,distance_km,duration,avg_hr\n2018-08-27,10,55,140\n"
    (entry,), _ = parse_manual_csv(data)
    assert entry.pace == pytest.approx(5.5)


def test_pace_and_duration_are_mutually_exclusive():
    both = (
        b"date,distance_km,pace,duration,avg_hr\n"
        b"2018-08-27,10,5:00,50:00,140\n"
        b"2018-08-28,10,5:00,,140\n"
    )
    entries, errors = parse_manual_csv(both)
    assert len(entries) == 1 and entries[0].date.day == 28
    assert errors[0].line == 2 and "exactly one" in errors[0].message

    neither = (
        b"date,distance_km,pace,duration,avg_hr\n"
        b"2018-08-27,10,,,140\n"
        b"2018-08-28,10,5:00,,140\n"
    )
    entries, errors = parse_manual_csv(neither)
    assert len(entries) == 1
    assert errors[0].line == 2


def test_heart_rate_outside_physiological_range():
    data = (
        b"date,distance_km,pace,avg_hr\n"
        b"2018-08-27,10,5:00,25\n"
        b"2018-08-28,10,5:00,300\n"
        b"2018-08-29,10,5:00,140\n"
    )
    entries, errors = parse_manual_csv(data)
    assert len(entries) == 1
    assert sorted(e.line for e in errors) == [2, 3]


def test_blank_lines_are_skipped_without_errors():
    data = b"date,distance_km,pace,avg_hr\n\n2018-08-27,10,5:00,140\n,,,\n"
    entries, errors = parse_manual_csv(data)
    assert len(entries) == 1 and errors == []


def test_manual_activity_id_depends_only_on_row_content():
    (entry,), _ = parse_manual_csv(
        b"date,distance_km,pace,avg_hr\n2018-08-27,10,5:00,140\n"
    )
    a = manual_entry_to_activity(entry)
    b = manual_entry_to_activity(entry)
    assert a.id == b.id
    assert a.source == MANUAL_SOURCE
    assert a.summary is not None
    assert a.summary.hre == pytest.approx(700.0)
    assert a.start_time == dt.datetime(2018, 8, 27, tzinfo=dt.timezone.utc)


# -------------------------------------------------------------------- scan


def _write_fit(path, **kwargs):
    path.write_bytes(encode_fixture(steady_fixture(**kwargs)))


def test_scan_directory_finds_fit_and_csv(tmp_path):
    _write_fit(tmp_path / "run.fit")
    (tmp_path / "log.csv").write_bytes(TABLE_CSV)
    result = scan([tmp_path])
    assert len(result.activities) == 5  # 1 fit + 4 log rows
    assert result.manifest == ()
    sources = {a.source for a in result.activities}
    assert sources == {"fit-file", "manual-csv"}
    starts = [a.start_time for a in result.activities]
    assert starts == sorted(starts)


def test_scan_same_file_twice_yields_one_activity(tmp_path):
    _write_fit(tmp_path / "a.fit")
    (tmp_path / "b.fit").write_bytes((tmp_path / "a.fit").read_bytes())
    result = scan([tmp_path])
    assert len(result.activities) == 1


def test_scan_same_log_row_in_two_files_deduplicates(tmp_path):
    (tmp_path / "log1.csv").write_bytes(TABLE_CSV)
    (tmp_path / "log2.csv").write_bytes(TABLE_CSV)
    result = scan([tmp_path])
    assert len(result.activities) == 4


def test_scan_corrupt_file_lands_in_manifest(tmp_path):
    _write_fit(tmp_path / "good.fit")
    blob = bytearray(encode_fixture(steady_fixture()))
    blob[30] ^= 0xFF
    (tmp_path / "bad.fit").write_bytes(bytes(blob))
    result = scan([tmp_path])
    assert len(result.activities) == 1
    assert len(result.manifest) == 1
    entry = result.manifest[0]
    assert entry.path.endswith("bad.fit")
    assert entry.error == "CrcMismatch"


def test_scan_is_idempotent(tmp_path):
    _write_fit(tmp_path / "run.fit")
    (tmp_path / "log.csv").write_bytes(TABLE_CSV)
    first = scan([tmp_path])
    second = scan([tmp_path])
    assert [a.id for a in first.activities] == [a.id for a in second.activities]
    assert first.manifest == second.manifest


def test_scan_nothing_found_carries_manifest(tmp_path):
    (tmp_path / "junk.fit").write_bytes(b"\x00" * 40)
    with pytest.raises(NothingFound) as excinfo:
        scan([tmp_path])
    assert len(excinfo.value.manifest) == 1
    assert excinfo.value.manifest[0].path.endswith("junk.fit")


def test_scan_missing_path_reported_not_fatal(tmp_path):
    _write_fit(tmp_path / "run.fit")
    result = scan([tmp_path, tmp_path / "nope"])
    assert len(result.activities) == 1
    assert any(m.error == "NotFound" for m in result.manifest)


def test_manifest_jsonl_round_trips(tmp_path):
    (tmp_path / "junk.fit").write_bytes(b"not a fit file at all....")
    _write_fit(tmp_path / "run.fit")
    result = scan([tmp_path])
    lines = result.manifest_jsonl().splitlines()
    assert len(lines) == len(result.manifest) == 1
    decoded = json.loads(lines[0])
    assert set(decoded) == {"path", "error", "detail"}
    assert decoded == {
        "path": result.manifest[0].path,
        "error": result.manifest[0].error,
        "detail": result.manifest[0].detail,
    }
    assert isinstance(result.manifest[0], ManifestEntry)
