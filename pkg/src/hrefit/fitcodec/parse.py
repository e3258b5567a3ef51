"""Structural FIT parser: header, checksums, record stream.

parse_fit turns one FIT byte block into a RawFitFile of raw messages; no
profile knowledge is applied here beyond base types.  split_chained and
parse_fit_all handle files made of several concatenated FIT blocks.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

from ..errors import HrefitError
from .crc import crc16


class TruncatedFile(HrefitError):
    """Input ended before the structure it promised."""


class BadSignature(HrefitError):
    """Header does not carry the '.FIT' marker."""


class CrcMismatch(HrefitError):
    """Stored checksum does not match the bytes it covers."""


class UnknownBaseType(HrefitError):
    """A field definition used a base type number outside the known set."""


class OrphanDataMessage(HrefitError):
    """A data message arrived for a local type with no prior definition."""


HEADER_SIGNATURE = b".FIT"
MIN_HEADER_SIZE = 12

# Records whose header has bit 7 set carry a compressed 5-bit timestamp
# offset instead of a full header byte layout.
_COMPRESSED_FLAG = 0x80
_DEFINITION_FLAG = 0x40
_DEV_DATA_FLAG = 0x20

# FIT absolute timestamps are uint32 seconds; field 253 is the timestamp
# field in every message type that has one.
TIMESTAMP_FIELD = 253


@dataclass(frozen=True)
class BaseType:
    """One FIT base type: wire size, struct letter, invalid sentinel."""

    name: str
    size: int
    fmt: str  # struct format letter; '' for string/byte blobs
    invalid: int | None  # sentinel meaning "absent"; None when byte-pattern based


# Indexed by the low 5 bits of the base type byte.
BASE_TYPES: dict[int, BaseType] = {
    0x00: BaseType("enum", 1, "B", 0xFF),
    0x01: BaseType("sint8", 1, "b", 0x7F),
    0x02: BaseType("uint8", 1, "B", 0xFF),
    0x03: BaseType("sint16", 2, "h", 0x7FFF),
    0x04: BaseType("uint16", 2, "H", 0xFFFF),
    0x05: BaseType("sint32", 4, "i", 0x7FFFFFFF),
    0x06: BaseType("uint32", 4, "I", 0xFFFFFFFF),
    0x07: BaseType("string", 1, "", None),
    0x08: BaseType("float32", 4, "f", None),
    0x09: BaseType("float64", 8, "d", None),
    0x0A: BaseType("uint8z", 1, "B", 0x00),
    0x0B: BaseType("uint16z", 2, "H", 0x0000),
    0x0C: BaseType("uint32z", 4, "I", 0x00000000),
    0x0D: BaseType("byte", 1, "", None),
    0x0E: BaseType("sint64", 8, "q", 0x7FFFFFFFFFFFFFFF),
    0x0F: BaseType("uint64", 8, "Q", 0xFFFFFFFFFFFFFFFF),
    0x10: BaseType("uint64z", 8, "Q", 0x0000000000000000),
}

_BASE_TYPE_BY_NAME = {bt.name: bt for bt in BASE_TYPES.values()}


def base_type_by_name(name: str) -> BaseType:
    return _BASE_TYPE_BY_NAME[name]


@dataclass(frozen=True)
class RawField:
    """One field slot: profile field number, base type name, raw bytes.

    Definition messages carry the declared size with empty raw bytes; data
    messages carry exactly `size` raw bytes.
    """

    field_def_num: int
    base_type: str
    raw: bytes
    size: int


@dataclass(frozen=True)
class RawMessage:
    """A definition or data message, before any profile interpretation.

    timestamp is the resolved absolute FIT timestamp for data messages that
    arrived with a compressed-timestamp header; None otherwise.
    """

    kind: str  # "definition" | "data"
    local_type: int
    global_num: int
    endianness: str  # "little" | "big"
    fields: tuple[RawField, ...]
    timestamp: int | None = None


@dataclass(frozen=True)
class RawFitFile:
    """Outcome of structurally parsing one FIT block."""

    protocol_version: int
    profile_version: int
    data_size: int
    messages: tuple[RawMessage, ...]
    header_size: int
    header_crc_ok: bool | None  # None when the header carries no checksum
    file_crc_ok: bool


@dataclass(frozen=True)
class _Definition:
    global_num: int
    endianness: str
    fields: tuple[RawField, ...]  # declared slots, empty raw
    data_size: int  # profile fields only
    dev_size: int  # developer field bytes appended to each data message


def _parse_header(data: bytes, offset: int = 0):
    """Parse one block header starting at offset.

    Returns (header_size, protocol, profile, data_size, header_crc_ok).
    """
    if len(data) - offset < MIN_HEADER_SIZE:
        raise TruncatedFile(
            f"need at least {MIN_HEADER_SIZE} header bytes, have {len(data) - offset}"
        )
    header_size = data[offset]
    if header_size < MIN_HEADER_SIZE:
        raise BadSignature(f"implausible header size {header_size}")
    if len(data) - offset < header_size:
        raise TruncatedFile(f"header claims {header_size} bytes, input is shorter")
    protocol = data[offset + 1]
    profile, data_size = struct.unpack_from("<HI", data, offset + 2)
    if data[offset + 8 : offset + 12] != HEADER_SIGNATURE:
        raise BadSignature("missing .FIT marker")
    header_crc_ok: bool | None = None
    if header_size >= 14:
        (stored,) = struct.unpack_from("<H", data, offset + 12)
        if stored != 0:  # zero means "checksum not present"
            header_crc_ok = crc16(data[offset : offset + 12]) == stored
    return header_size, protocol, profile, data_size, header_crc_ok


def _read_definition(body: bytes, off: int, local_type: int, has_dev: bool):
    """Parse a definition record body; returns (_Definition, new_offset)."""
    if off + 5 > len(body):
        raise TruncatedFile("definition message truncated")
    arch = body[off + 1]
    endianness = "big" if arch else "little"
    order = ">" if arch else "<"
    (global_num,) = struct.unpack_from(order + "H", body, off + 2)
    n_fields = body[off + 4]
    off += 5
    if off + 3 * n_fields > len(body):
        raise TruncatedFile("field definitions truncated")
    fields: list[RawField] = []
    data_size = 0
    for _ in range(n_fields):
        fnum, size, bt_byte = body[off], body[off + 1], body[off + 2]
        off += 3
        code = bt_byte & 0x1F
        if code not in BASE_TYPES:
            raise UnknownBaseType(
                f"base type 0x{bt_byte:02X} in message {global_num} field {fnum}"
            )
        fields.append(RawField(fnum, BASE_TYPES[code].name, b"", size))
        data_size += size
    dev_size = 0
    if has_dev:
        if off >= len(body):
            raise TruncatedFile("developer field count truncated")
        n_dev = body[off]
        off += 1
        if off + 3 * n_dev > len(body):
            raise TruncatedFile("developer field definitions truncated")
        for _ in range(n_dev):
            dev_size += body[off + 1]
            off += 3
    return (
        _Definition(global_num, endianness, tuple(fields), data_size, dev_size),
        off,
    )


def _read_data(body: bytes, off: int, definition: _Definition):
    """Slice the field bytes of a data record; returns (fields, new_offset)."""
    need = definition.data_size + definition.dev_size
    if off + need > len(body):
        raise TruncatedFile("data message truncated")
    fields: list[RawField] = []
    for slot in definition.fields:
        fields.append(
            RawField(slot.field_def_num, slot.base_type, body[off : off + slot.size], slot.size)
        )
        off += slot.size
    off += definition.dev_size  # developer data carried but not interpreted
    return tuple(fields), off


def _timestamp_from_fields(definition: _Definition, fields: tuple[RawField, ...]) -> int | None:
    """Extract a valid absolute uint32 timestamp (field 253) if present."""
    for f in fields:
        if f.field_def_num == TIMESTAMP_FIELD and f.base_type == "uint32" and f.size == 4:
            order = ">" if definition.endianness == "big" else "<"
            (value,) = struct.unpack(order + "I", f.raw)
            if value != 0xFFFFFFFF:
                return value
    return None


def parse_fit(data: bytes, check_crc: bool = True) -> RawFitFile:
    """Parse a single FIT block into raw messages.

    The trailing file checksum is verified before the record stream is
    walked, so any corruption in the data section surfaces as CrcMismatch
    rather than as a downstream structural error.  With check_crc False the
    mismatch is only recorded on the result.
    """
    header_size, protocol, profile, data_size, header_crc_ok = _parse_header(data)
    end = header_size + data_size
    if len(data) < end + 2:
        raise TruncatedFile(
            f"header promises {data_size} data bytes plus checksum, input is shorter"
        )
    (stored_crc,) = struct.unpack_from("<H", data, end)
    file_crc_ok = crc16(data[:end]) == stored_crc
    if check_crc:
        if header_crc_ok is False:
            raise CrcMismatch("header checksum mismatch")
        if not file_crc_ok:
            raise CrcMismatch("file checksum mismatch")

    body = data[header_size:end]
    messages: list[RawMessage] = []
    definitions: dict[int, _Definition] = {}
    last_timestamp: int | None = None
    off = 0
    while off < len(body):
        hdr = body[off]
        off += 1
        if hdr & _COMPRESSED_FLAG:
            local_type = (hdr >> 5) & 0x3
            offset5 = hdr & 0x1F
            definition = definitions.get(local_type)
            if definition is None:
                raise OrphanDataMessage(
                    f"compressed-timestamp data for undefined local type {local_type}"
                )
            fields, off = _read_data(body, off, definition)
            resolved: int | None = None
            if last_timestamp is not None:
                resolved = (last_timestamp & ~0x1F) | offset5
                if offset5 < (last_timestamp & 0x1F):
                    resolved += 0x20  # offset rolled over since the anchor
                last_timestamp = resolved
            messages.append(
                RawMessage(
                    "data",
                    local_type,
                    definition.global_num,
                    definition.endianness,
                    fields,
                    timestamp=resolved,
                )
            )
        elif hdr & _DEFINITION_FLAG:
            local_type = hdr & 0xF
            definition, off = _read_definition(body, off, local_type, bool(hdr & _DEV_DATA_FLAG))
            definitions[local_type] = definition
            messages.append(
                RawMessage(
                    "definition",
                    local_type,
                    definition.global_num,
                    definition.endianness,
                    definition.fields,
                )
            )
        else:
            local_type = hdr & 0xF
            definition = definitions.get(local_type)
            if definition is None:
                raise OrphanDataMessage(f"data message for undefined local type {local_type}")
            fields, off = _read_data(body, off, definition)
            ts = _timestamp_from_fields(definition, fields)
            if ts is not None:
                last_timestamp = ts
            messages.append(
                RawMessage(
                    "data",
                    local_type,
                    definition.global_num,
                    definition.endianness,
                    fields,
                )
            )

    return RawFitFile(
        protocol_version=protocol,
        profile_version=profile,
        data_size=data_size,
        messages=tuple(messages),
        header_size=header_size,
        header_crc_ok=header_crc_ok,
        file_crc_ok=file_crc_ok,
    )


def split_chained(data: bytes) -> list[bytes]:
    """Split a byte string of one or more concatenated FIT blocks."""
    blocks: list[bytes] = []
    off = 0
    while off < len(data):
        header_size, _, _, data_size, _ = _parse_header(data, off)
        block_len = header_size + data_size + 2
        if off + block_len > len(data):
            raise TruncatedFile("chained block extends past end of input")
        blocks.append(data[off : off + block_len])
        off += block_len
    if not blocks:
        raise TruncatedFile("empty input")
    return blocks


def parse_fit_all(data: bytes, check_crc: bool = True) -> list[RawFitFile]:
    """Parse every block of a possibly chained FIT file."""
    return [parse_fit(block, check_crc=check_crc) for block in split_chained(data)]
