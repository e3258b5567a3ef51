"""Binary codec for FIT activity files: CRC, parser, decoder, encoder."""
from .crc import crc16
from .parse import (
    BadSignature,
    CrcMismatch,
    OrphanDataMessage,
    RawField,
    RawFitFile,
    RawMessage,
    TruncatedFile,
    UnknownBaseType,
    parse_fit,
    parse_fit_all,
    split_chained,
)
from .decode import NoRecords, decode_activity
from .encode import ActivityFixture, FixtureSample, ValueOutOfRange, encode_fixture

__all__ = [
    "crc16",
    "parse_fit",
    "parse_fit_all",
    "split_chained",
    "RawFitFile",
    "RawMessage",
    "RawField",
    "TruncatedFile",
    "BadSignature",
    "CrcMismatch",
    "UnknownBaseType",
    "OrphanDataMessage",
    "decode_activity",
    "NoRecords",
    "encode_fixture",
    "ActivityFixture",
    "FixtureSample",
    "ValueOutOfRange",
]
