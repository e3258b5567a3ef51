"""Checksum tests: frozen reference values plus a bitwise cross-check."""
import struct

from hypothesis import given
from hypothesis import strategies as st

from hrefit.fitcodec import crc16


def crc16_bitwise(data: bytes) -> int:
    """Independent straight-line implementation: reflected 0xA001, init 0."""
    crc = 0
    for byte in data:
        crc ^= byte
        for _ in range(8):
            if crc & 1:
                crc = (crc >> 1) ^ 0xA001
            else:
                crc >>= 1
    return crc


def test_frozen_values():
    assert crc16(b"") == 0x0000
    assert crc16(b".FIT") == 0x92DE
    assert crc16(b"123456789") == 0xBB3D


def test_single_bytes_match_reference():
    for b in range(256):
        assert crc16(bytes([b])) == crc16_bitwise(bytes([b]))


@given(st.binary(max_size=512))
def test_matches_bitwise_reference(data):
    assert crc16(data) == crc16_bitwise(data)


@given(st.binary(max_size=256), st.binary(max_size=256))
def test_incremental_equals_whole(a, b):
    assert crc16(b, crc16(a)) == crc16(a + b)


@given(st.binary(max_size=256))
def test_appending_own_crc_yields_zero(data):
    # the property the file checksum relies on
    tagged = data + struct.pack("<H", crc16(data))
    assert crc16(tagged) == 0
