"""
Precomputed composite-index bitmaps and their on-disk format.

File layout, little-endian::

    offset  size          field
    0       5             magic b"P6TBL"
    5       1             version (0x01)
    6       8             kmax (u64)
    14      ceil(kmax/8)  A bitmap
    ...     ceil(kmax/8)  B bitmap
    ...     4             CRC32 (IEEE) of every preceding byte

Bit for wheel index k sits at bit (k-1) % 8 of byte (k-1) // 8, LSB first.
"""

from __future__ import annotations

import os
import struct
import zlib
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    MAX_TABLE_KMAX,
    BadMagic,
    ChecksumMismatch,
    TableFormatError,
    TruncatedStream,
    VersionMismatch,
    check_natural,
)

MAGIC = b"P6TBL"
VERSION = 1
_HEADER = struct.Struct("<5sBQ")
_CRC = struct.Struct("<I")


@dataclass(eq=False)
class CompositeIndexTable:
    """Two bitmaps over wheel indices 1..kmax.

    ``a_bits[k]`` is set when 6k-1 is composite, ``b_bits[k]`` when 6k+1 is.
    Both arrays have length kmax + 1; slot 0 is unused and always False.
    """

    kmax: int
    a_bits: np.ndarray = field(repr=False)
    b_bits: np.ndarray = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, CompositeIndexTable):
            return NotImplemented
        return (
            self.kmax == other.kmax
            and np.array_equal(self.a_bits, other.a_bits)
            and np.array_equal(self.b_bits, other.b_bits)
        )

    def a_composite(self, k: int) -> bool:
        return bool(self.a_bits[k])

    def b_composite(self, k: int) -> bool:
        return bool(self.b_bits[k])

    def a_indices(self) -> list[int]:
        return np.flatnonzero(self.a_bits).tolist()

    def b_indices(self) -> list[int]:
        return np.flatnonzero(self.b_bits).tolist()


def build_composite_index_table(kmax: int, max_kmax: int = MAX_TABLE_KMAX) -> CompositeIndexTable:
    """Mark every selector image up to kmax.

    Each rule is an arithmetic progression in j for fixed i, so a row is one
    strided slice assignment. Pairs are split at the diagonal: rows cover
    j >= i and, for the asymmetric S1, columns cover i >= j.
    """
    kmax = check_natural("kmax", kmax, maximum=max_kmax)
    a = np.zeros(kmax + 1, dtype=bool)
    b = np.zeros(kmax + 1, dtype=bool)

    t = 1
    while 6 * t * t - 2 * t <= kmax:
        # S3(t, t) = 6t^2 - 2t, then step 6t-1 along j
        b[6 * t * t - 2 * t :: 6 * t - 1] = True
        # S1 column j=t, i >= t: (6t-1) i + t, starting at 6t^2
        a[6 * t * t :: 6 * t - 1] = True
        # S1 row i=t, j >= t: (6t+1) j - t, starting at 6t^2
        a[6 * t * t :: 6 * t + 1] = True
        # S2(t, t) = 6t^2 + 2t, then step 6t+1 along j
        b[6 * t * t + 2 * t :: 6 * t + 1] = True
        t += 1

    return CompositeIndexTable(kmax, a, b)


def _pack(bits: np.ndarray) -> bytes:
    return np.packbits(bits[1:], bitorder="little").tobytes()


def _unpack(raw: bytes, kmax: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    if bits[kmax:].any():
        raise TableFormatError("nonzero padding bits after kmax")
    out = np.zeros(kmax + 1, dtype=bool)
    out[1:] = bits[:kmax].astype(bool)
    return out


def serialize_table(table: CompositeIndexTable) -> bytes:
    body = _HEADER.pack(MAGIC, VERSION, table.kmax) + _pack(table.a_bits) + _pack(table.b_bits)
    return body + _CRC.pack(zlib.crc32(body))


def deserialize_table(data: bytes) -> CompositeIndexTable:
    data = bytes(data)
    if len(data) >= len(MAGIC) and data[: len(MAGIC)] != MAGIC:
        raise BadMagic(f"expected magic {MAGIC!r}, got {data[:len(MAGIC)]!r}")
    if len(data) < _HEADER.size:
        raise TruncatedStream(f"stream holds {len(data)} bytes, header needs {_HEADER.size}")
    _, version, kmax = _HEADER.unpack_from(data)
    if version != VERSION:
        raise VersionMismatch(f"table version {version}, this reader handles {VERSION}")
    if kmax < 1:
        raise TableFormatError("kmax must be >= 1")
    nbytes = (kmax + 7) // 8
    expected = _HEADER.size + 2 * nbytes + _CRC.size
    if len(data) < expected:
        raise TruncatedStream(f"stream holds {len(data)} bytes, kmax={kmax} needs {expected}")
    if len(data) > expected:
        raise TableFormatError(f"{len(data) - expected} trailing bytes after checksum")
    (crc,) = _CRC.unpack_from(data, expected - _CRC.size)
    if zlib.crc32(data[: expected - _CRC.size]) != crc:
        raise ChecksumMismatch("CRC32 does not match table contents")
    off = _HEADER.size
    a = _unpack(data[off : off + nbytes], kmax)
    b = _unpack(data[off + nbytes : off + 2 * nbytes], kmax)
    return CompositeIndexTable(kmax, a, b)


def save_table(table: CompositeIndexTable, path: str | os.PathLike) -> None:
    with open(path, "wb") as f:
        f.write(serialize_table(table))


def load_table(path: str | os.PathLike) -> CompositeIndexTable:
    with open(path, "rb") as f:
        return deserialize_table(f.read())
