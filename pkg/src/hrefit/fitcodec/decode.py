"""Profile decoding: raw FIT messages to an Activity.

Applies the subset of the global profile this toolkit cares about (file_id,
record, lap, session, hrv), converts wire units to SI, and maps invalid
sentinels to absent values.  Unknown message types survive in the raw parse
but are dropped here.
"""
from __future__ import annotations

import hashlib
import struct
from bisect import bisect_left, bisect_right
from datetime import datetime, timedelta, timezone

from ..errors import HrefitError
from ..model import Activity, Lap, RRSeries, Sample
from .parse import RawField, RawFitFile, RawMessage, base_type_by_name

FIT_EPOCH = datetime(1989, 12, 31, tzinfo=timezone.utc)

SEMICIRCLE_TO_DEG = 180.0 / 2**31

# Global message numbers.
MSG_FILE_ID = 0
MSG_SESSION = 18
MSG_LAP = 19
MSG_RECORD = 20
MSG_HRV = 78

# record message fields
REC_POSITION_LAT = 0
REC_POSITION_LONG = 1
REC_ALTITUDE = 2
REC_HEART_RATE = 3
REC_CADENCE = 4
REC_DISTANCE = 5
REC_SPEED = 6
REC_ENHANCED_SPEED = 73
REC_ENHANCED_ALTITUDE = 78
FIELD_TIMESTAMP = 253

# session message fields
SES_START_TIME = 2
SES_SPORT = 5
SES_TOTAL_ELAPSED = 7
SES_TOTAL_TIMER = 8
SES_TOTAL_DISTANCE = 9
SES_AVG_SPEED = 14
SES_AVG_HEART_RATE = 16

# lap message fields
LAP_START_TIME = 2
LAP_TOTAL_ELAPSED = 7
LAP_TOTAL_TIMER = 8
LAP_TOTAL_DISTANCE = 9
LAP_AVG_SPEED = 13
LAP_AVG_HEART_RATE = 15

# hrv message: field 0 is an array of uint16 milliseconds
HRV_TIME = 0

SPORT_NAMES = {
    0: "generic",
    1: "running",
    2: "cycling",
    3: "transition",
    4: "fitness_equipment",
    5: "swimming",
    11: "walking",
    17: "hiking",
}


class NoRecords(HrefitError):
    """The file decoded structurally but carried no record messages."""


def fit_timestamp_to_datetime(value: int) -> datetime:
    return FIT_EPOCH + timedelta(seconds=value)


def _all_invalid(raw: bytes) -> bool:
    return all(b == 0xFF for b in raw)


def decode_field(field: RawField, endianness: str):
    """Decode one raw field to a python value.

    Returns None for invalid sentinels, a scalar for single values, a str
    for strings, bytes for byte blobs, and a tuple for arrays.  Array
    elements that hold the sentinel become None in place.
    """
    bt = base_type_by_name(field.base_type)
    raw = field.raw
    if bt.name == "string":
        return raw.split(b"\x00", 1)[0].decode("utf-8", errors="replace")
    if bt.name == "byte":
        return None if _all_invalid(raw) else raw
    order = ">" if endianness == "big" else "<"
    if len(raw) % bt.size != 0:
        return None  # declared size incompatible with the base type
    count = len(raw) // bt.size
    values = struct.unpack(f"{order}{count}{bt.fmt}", raw)
    decoded = []
    for i, v in enumerate(values):
        if bt.fmt in ("f", "d"):
            # float invalid sentinel is the all-ones byte pattern
            pattern = raw[i * bt.size : (i + 1) * bt.size]
            decoded.append(None if _all_invalid(pattern) else v)
        else:
            decoded.append(None if bt.invalid is not None and v == bt.invalid else v)
    if count == 1:
        return decoded[0]
    return tuple(decoded)


def _fields_dict(msg: RawMessage) -> dict[int, object]:
    out: dict[int, object] = {}
    for f in msg.fields:
        out[f.field_def_num] = decode_field(f, msg.endianness)
    return out


def _scaled(value, scale: float, offset: float = 0.0) -> float | None:
    if value is None:
        return None
    return value / scale - offset


def _content_id(raw: RawFitFile) -> str:
    """Deterministic fallback id derived from the decoded message stream."""
    h = hashlib.sha1()
    for msg in raw.messages:
        h.update(msg.kind.encode())
        h.update(bytes([msg.local_type]))
        h.update(msg.global_num.to_bytes(2, "little"))
        for f in msg.fields:
            h.update(bytes([f.field_def_num & 0xFF, f.size & 0xFF]))
            h.update(f.raw)
    return h.hexdigest()


def _decode_record(msg: RawMessage) -> dict:
    fields = _fields_dict(msg)
    ts = fields.get(FIELD_TIMESTAMP)
    if ts is None:
        ts = msg.timestamp  # compressed-timestamp header
    speed = _scaled(fields.get(REC_ENHANCED_SPEED), 1000.0)
    if speed is None:
        speed = _scaled(fields.get(REC_SPEED), 1000.0)
    altitude = _scaled(fields.get(REC_ENHANCED_ALTITUDE), 5.0, 500.0)
    if altitude is None:
        altitude = _scaled(fields.get(REC_ALTITUDE), 5.0, 500.0)
    lat = fields.get(REC_POSITION_LAT)
    lon = fields.get(REC_POSITION_LONG)
    return {
        "timestamp": ts,
        "lat": None if lat is None else lat * SEMICIRCLE_TO_DEG,
        "lon": None if lon is None else lon * SEMICIRCLE_TO_DEG,
        "altitude": altitude,
        "distance": _scaled(fields.get(REC_DISTANCE), 100.0),
        "speed": speed,
        "heart_rate": fields.get(REC_HEART_RATE),
    }


def _lap_from_fields(fields: dict, sample_ts: list[int]) -> Lap | None:
    start = fields.get(LAP_START_TIME)
    elapsed = _scaled(fields.get(LAP_TOTAL_ELAPSED), 1000.0)
    timer = _scaled(fields.get(LAP_TOTAL_TIMER), 1000.0)
    total_time = timer if timer is not None else elapsed
    if start is None or total_time is None or not sample_ts:
        return None
    lo = bisect_left(sample_ts, start)
    hi = bisect_right(sample_ts, start + (elapsed if elapsed is not None else total_time))
    if hi <= lo:
        return None
    return Lap(
        start_index=lo,
        end_index=hi,
        total_time=float(total_time),
        total_distance=_scaled(fields.get(LAP_TOTAL_DISTANCE), 100.0),
        avg_heart_rate=_as_float(fields.get(LAP_AVG_HEART_RATE)),
        avg_speed=_scaled(fields.get(LAP_AVG_SPEED), 1000.0),
    )


def _as_float(value) -> float | None:
    return None if value is None else float(value)


def decode_activity(raw: RawFitFile, activity_id: str | None = None) -> Activity:
    """Assemble an Activity from one parsed FIT block.

    activity_id should be a content hash of the source bytes when the caller
    has them; otherwise a deterministic hash of the message stream is used.
    """
    records: list[dict] = []
    session_fields: dict | None = None
    lap_fields: list[dict] = []
    rr_values: list[float] = []

    for msg in raw.messages:
        if msg.kind != "data":
            continue
        if msg.global_num == MSG_RECORD:
            records.append(_decode_record(msg))
        elif msg.global_num == MSG_SESSION:
            if session_fields is None:
                session_fields = _fields_dict(msg)
        elif msg.global_num == MSG_LAP:
            lap_fields.append(_fields_dict(msg))
        elif msg.global_num == MSG_HRV:
            value = _fields_dict(msg).get(HRV_TIME)
            if value is None:
                continue
            if not isinstance(value, tuple):
                value = (value,)
            for v in value:
                if v is not None:
                    rr_values.append(v / 1000.0)

    records = [r for r in records if r["timestamp"] is not None]
    if not records:
        raise NoRecords("no record messages with timestamps")
    records.sort(key=lambda r: r["timestamp"])

    start_ts: int | None = None
    sport = "generic"
    if session_fields is not None:
        start_ts = session_fields.get(SES_START_TIME)
        sport_num = session_fields.get(SES_SPORT)
        if sport_num is not None:
            sport = SPORT_NAMES.get(sport_num, f"sport-{sport_num}")
    if start_ts is None:
        start_ts = records[0]["timestamp"]

    samples: list[Sample] = []
    sample_ts: list[int] = []
    seen_ts: set[int] = set()
    for r in records:
        ts = r["timestamp"]
        if ts in seen_ts:
            continue  # duplicate instant; first record wins
        seen_ts.add(ts)
        sample_ts.append(ts)
        samples.append(
            Sample(
                t=float(ts - start_ts),
                timestamp=fit_timestamp_to_datetime(ts),
                lat=r["lat"],
                lon=r["lon"],
                altitude=r["altitude"],
                distance=r["distance"],
                speed=r["speed"],
                heart_rate=r["heart_rate"],
            )
        )
    laps = tuple(
        lap for lf in lap_fields if (lap := _lap_from_fields(lf, sample_ts)) is not None
    )

    rr = RRSeries.from_raw(rr_values) if rr_values else None

    return Activity(
        id=activity_id if activity_id is not None else _content_id(raw),
        start_time=fit_timestamp_to_datetime(start_ts),
        sport=sport,
        samples=tuple(samples),
        laps=laps,
        rr=rr,
    )
