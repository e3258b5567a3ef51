"""Synthetic FIT writer for tests, demos, and the fixture scripts.

encode_fixture produces a single little-endian FIT block with file_id,
session, lap, record, and hrv messages, quantized exactly the way real
devices write them, so parse + decode recovers the fixture within wire
resolution.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from datetime import datetime

from ..errors import HrefitError
from .crc import crc16
from .decode import FIT_EPOCH
from .parse import HEADER_SIGNATURE

PROTOCOL_VERSION = 0x20
PROFILE_VERSION = 2132


class ValueOutOfRange(HrefitError):
    """A fixture value cannot be represented in its FIT wire type."""


@dataclass(frozen=True)
class FixtureSample:
    """One sample to encode; None fields become invalid sentinels."""

    elapsed: float  # seconds since fixture start
    lat: float | None = None  # degrees
    lon: float | None = None
    altitude: float | None = None  # meters
    distance: float | None = None  # cumulative meters
    speed: float | None = None  # m/s
    heart_rate: int | None = None  # bpm


@dataclass(frozen=True)
class ActivityFixture:
    """Input description for encode_fixture.

    laps are (start_sample_index, end_sample_index) pairs, end exclusive.
    rr_intervals are seconds; they become hrv messages.
    """

    start_time: datetime
    samples: tuple[FixtureSample, ...]
    laps: tuple[tuple[int, int], ...] = ()
    rr_intervals: tuple[float, ...] = ()
    sport: int = 1  # running


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueOutOfRange(message)


def _fit_ts(dt: datetime) -> int:
    value = round((dt - FIT_EPOCH).total_seconds())
    _require(0 <= value <= 0xFFFFFFFE, f"timestamp {dt.isoformat()} outside FIT range")
    return value


def _semicircles(deg: float, kind: str) -> int:
    limit = 90.0 if kind == "lat" else 180.0
    _require(-limit <= deg <= limit, f"{kind} {deg} outside +/-{limit} degrees")
    value = round(deg * 2**31 / 180.0)
    _require(-(2**31) <= value <= 2**31 - 2, f"{kind} {deg} not representable")
    return value


def _quantize(value: float | None, scale: float, offset: float, lo: int, hi: int,
              invalid: int, what: str) -> int:
    if value is None:
        return invalid
    raw = round((value + offset) * scale)
    _require(lo <= raw <= hi, f"{what} {value} outside wire range")
    return raw


_U8_INVALID = 0xFF
_U16_INVALID = 0xFFFF
_U32_INVALID = 0xFFFFFFFF
_S32_INVALID = 0x7FFFFFFF

_BT_ENUM = 0x00
_BT_UINT8 = 0x02
_BT_SINT32 = 0x85
_BT_UINT16 = 0x84
_BT_UINT32 = 0x86

# Local message type assignments for the generated block.
_L_FILE_ID = 0
_L_SESSION = 1
_L_LAP = 2
_L_RECORD = 3
_L_HRV = 4

_HRV_SLOTS = 5  # uint16 intervals per hrv message


def _definition(local: int, global_num: int, fields: list[tuple[int, int, int]]) -> bytes:
    out = bytearray()
    out.append(0x40 | local)
    out.append(0)  # reserved
    out.append(0)  # little-endian
    out += struct.pack("<H", global_num)
    out.append(len(fields))
    for fnum, size, base in fields:
        out += bytes((fnum, size, base))
    return bytes(out)


def encode_fixture(fixture: ActivityFixture) -> bytes:
    """Encode the fixture as one complete FIT block with checksums."""
    samples = fixture.samples
    _require(len(samples) > 0, "fixture needs at least one sample")
    for a, b in zip(samples, samples[1:]):
        _require(b.elapsed > a.elapsed, "sample elapsed times must increase")

    start_ts = _fit_ts(fixture.start_time)
    sample_ts = [start_ts + round(s.elapsed) for s in samples]
    for a, b in zip(sample_ts, sample_ts[1:]):
        _require(b > a, "samples closer than the 1 s timestamp resolution")

    body = bytearray()

    # file_id: type (enum), manufacturer (uint16), time_created (uint32)
    body += _definition(_L_FILE_ID, 0, [(0, 1, _BT_ENUM), (1, 2, _BT_UINT16), (4, 4, _BT_UINT32)])
    body.append(_L_FILE_ID)
    body += struct.pack("<BHI", 4, 255, start_ts)  # type 4 = activity

    # record: timestamp, lat, lon, altitude, heart_rate, distance, speed
    body += _definition(
        _L_RECORD,
        20,
        [
            (253, 4, _BT_UINT32),
            (0, 4, _BT_SINT32),
            (1, 4, _BT_SINT32),
            (2, 2, _BT_UINT16),
            (3, 1, _BT_UINT8),
            (5, 4, _BT_UINT32),
            (6, 2, _BT_UINT16),
        ],
    )
    hr_values: list[int] = []
    for s, ts in zip(samples, sample_ts):
        lat = _S32_INVALID if s.lat is None else _semicircles(s.lat, "lat")
        lon = _S32_INVALID if s.lon is None else _semicircles(s.lon, "lon")
        alt = _quantize(s.altitude, 5.0, 500.0, 0, 0xFFFE, _U16_INVALID, "altitude")
        dist = _quantize(s.distance, 100.0, 0.0, 0, 0xFFFFFFFE, _U32_INVALID, "distance")
        speed = _quantize(s.speed, 1000.0, 0.0, 0, 0xFFFE, _U16_INVALID, "speed")
        if s.heart_rate is None:
            hr = _U8_INVALID
        else:
            _require(0 <= s.heart_rate <= 0xFE, f"heart rate {s.heart_rate} outside 0..254")
            hr = s.heart_rate
            hr_values.append(hr)
        body.append(_L_RECORD)
        body += struct.pack("<IiiHBIH", ts, lat, lon, alt, hr, dist, speed)

    # laps: start_time, total_elapsed_time, total_timer_time, total_distance
    if fixture.laps:
        body += _definition(
            _L_LAP,
            19,
            [(2, 4, _BT_UINT32), (7, 4, _BT_UINT32), (8, 4, _BT_UINT32), (9, 4, _BT_UINT32)],
        )
        for lo, hi in fixture.laps:
            _require(0 <= lo < hi <= len(samples), f"lap ({lo}, {hi}) outside sample range")
            t0, t1 = sample_ts[lo], sample_ts[hi - 1]
            elapsed_ms = (t1 - t0) * 1000
            d0, d1 = samples[lo].distance, samples[hi - 1].distance
            lap_dist = (
                _U32_INVALID
                if d0 is None or d1 is None
                else _quantize(d1 - d0, 100.0, 0.0, 0, 0xFFFFFFFE, _U32_INVALID, "lap distance")
            )
            body.append(_L_LAP)
            body += struct.pack("<IIII", t0, elapsed_ms, elapsed_ms, lap_dist)

    # hrv: field 0, array of uint16 milliseconds, 0xFFFF padding
    if fixture.rr_intervals:
        body += _definition(_L_HRV, 78, [(0, 2 * _HRV_SLOTS, _BT_UINT16)])
        raw_rr: list[int] = []
        for rr in fixture.rr_intervals:
            ms = round(rr * 1000.0)
            _require(1 <= ms <= 0xFFFE, f"rr interval {rr} outside wire range")
            raw_rr.append(ms)
        for i in range(0, len(raw_rr), _HRV_SLOTS):
            chunk = raw_rr[i : i + _HRV_SLOTS]
            chunk += [_U16_INVALID] * (_HRV_SLOTS - len(chunk))
            body.append(_L_HRV)
            body += struct.pack(f"<{_HRV_SLOTS}H", *chunk)

    # session: start_time, sport, elapsed, timer, distance, avg_speed, avg_hr
    body += _definition(
        _L_SESSION,
        18,
        [
            (2, 4, _BT_UINT32),
            (5, 1, _BT_ENUM),
            (7, 4, _BT_UINT32),
            (8, 4, _BT_UINT32),
            (9, 4, _BT_UINT32),
            (14, 2, _BT_UINT16),
            (16, 1, _BT_UINT8),
        ],
    )
    total_ms = (sample_ts[-1] - sample_ts[0]) * 1000
    final_dist = next((s.distance for s in reversed(samples) if s.distance is not None), None)
    total_dist = _quantize(final_dist, 100.0, 0.0, 0, 0xFFFFFFFE, _U32_INVALID, "total distance")
    span_s = sample_ts[-1] - sample_ts[0]
    avg_speed = _U16_INVALID
    if final_dist is not None and span_s > 0:
        raw_avg = round(final_dist / span_s * 1000.0)
        if 0 <= raw_avg <= 0xFFFE:  # derived metadata; drop it rather than reject
            avg_speed = raw_avg
    avg_hr = round(sum(hr_values) / len(hr_values)) if hr_values else _U8_INVALID
    body.append(_L_SESSION)
    body += struct.pack(
        "<IBIIIHB", start_ts, fixture.sport, total_ms, total_ms, total_dist, avg_speed, avg_hr
    )

    header = bytearray(14)
    header[0] = 14
    header[1] = PROTOCOL_VERSION
    struct.pack_into("<H", header, 2, PROFILE_VERSION)
    struct.pack_into("<I", header, 4, len(body))
    header[8:12] = HEADER_SIGNATURE
    struct.pack_into("<H", header, 12, crc16(bytes(header[:12])))

    out = bytes(header) + bytes(body)
    return out + struct.pack("<H", crc16(out))
