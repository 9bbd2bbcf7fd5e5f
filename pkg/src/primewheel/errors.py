"""Exceptions and numeric ceilings shared across the package."""

import operator

# Largest natural number accepted anywhere. Keeps 6k+1 and every selector
# product inside an unsigned 64-bit word.
MAX_N = 2**62
MAX_K = (MAX_N - 1) // 6

# Bitmap tables are held in memory as two byte-per-index arrays.
MAX_TABLE_KMAX = 20_000_000
MAX_SIEVE_LIMIT = 6 * MAX_TABLE_KMAX - 2


class RangeError(ValueError):
    """An argument lies outside the supported numeric range."""


class OutOfTableRange(RangeError):
    """The wheel index of a query exceeds the kmax of the table consulted."""

    def __init__(self, k, kmax):
        super().__init__(f"wheel index {k} exceeds table kmax {kmax}; rebuild a larger table")
        self.k = k
        self.kmax = kmax


class TableFormatError(ValueError):
    """Base class for malformed table files."""


class BadMagic(TableFormatError):
    pass


class TruncatedStream(TableFormatError):
    pass


class VersionMismatch(TableFormatError):
    pass


class ChecksumMismatch(TableFormatError):
    pass


def check_natural(name: str, value: int, minimum: int = 1, maximum: int = MAX_N) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got bool")
    value = operator.index(value)
    if value < minimum:
        raise RangeError(f"{name} must be >= {minimum}, got {value}")
    if value > maximum:
        raise RangeError(f"{name} must be <= {maximum}, got {value}")
    return value
