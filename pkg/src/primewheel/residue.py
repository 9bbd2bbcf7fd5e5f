"""
Mod-6 partition of the naturals.

Every n >= 1 falls in exactly one of seven classes::

    UNIT   n = 1
    TWO    n = 6k - 4
    THREE  n = 6k - 3
    FOUR   n = 6k - 2
    A      n = 6k - 1
    SIX    n = 6k
    B      n = 6k + 1      (n >= 7)

with the wheel index k >= 1. Only A and B can hold primes other than 2 and 3.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import MAX_K, MAX_N, RangeError, check_natural


class ResidueClass(enum.Enum):
    UNIT = "UNIT"
    TWO = "TWO"
    THREE = "THREE"
    FOUR = "FOUR"
    A = "A"
    SIX = "SIX"
    B = "B"


class TrivialStatus(enum.Enum):
    PRIME_EXCEPTION = "PrimeException"
    ALWAYS_COMPOSITE = "AlwaysComposite"
    CANDIDATE = "Candidate"
    UNIT = "Unit"


# n = 6k + offset
_OFFSET = {
    ResidueClass.TWO: -4,
    ResidueClass.THREE: -3,
    ResidueClass.FOUR: -2,
    ResidueClass.A: -1,
    ResidueClass.SIX: 0,
    ResidueClass.B: 1,
}

_BY_RESIDUE = {
    2: ResidueClass.TWO,
    3: ResidueClass.THREE,
    4: ResidueClass.FOUR,
    5: ResidueClass.A,
    0: ResidueClass.SIX,
    1: ResidueClass.B,
}

CANDIDATE_CLASSES = (ResidueClass.A, ResidueClass.B)


@dataclass(frozen=True)
class ClassifiedNumber:
    n: int
    cls: ResidueClass
    k: int | None

    def __str__(self) -> str:
        if self.k is None:
            return f"{self.n}: {self.cls.value}"
        sign = _OFFSET[self.cls]
        form = "6k" if sign == 0 else f"6k{sign:+d}"
        return f"{self.n}: {self.cls.value} k={self.k} ({form})"


def classify(n: int) -> ClassifiedNumber:
    """Return the residue class and wheel index of ``n``.

    >>> classify(35)
    ClassifiedNumber(n=35, cls=<ResidueClass.A: 'A'>, k=6)
    """
    n = check_natural("n", n)
    if n == 1:
        return ClassifiedNumber(1, ResidueClass.UNIT, None)
    cls = _BY_RESIDUE[n % 6]
    k = (n - _OFFSET[cls]) // 6
    return ClassifiedNumber(n, cls, k)


def value_of(cls: ResidueClass, k: int) -> int:
    if cls is ResidueClass.UNIT:
        raise ValueError("UNIT has no wheel formula")
    k = check_natural("k", k, maximum=MAX_K)
    n = 6 * k + _OFFSET[cls]
    if n > MAX_N:
        raise RangeError(f"6k{_OFFSET[cls]:+d} exceeds {MAX_N} for k={k}")
    return n


def lemma_status(cls: ResidueClass, k: int | None = None) -> TrivialStatus:
    """Classify a residue class cell as trivially composite, exceptional or a candidate."""
    if cls is ResidueClass.UNIT:
        return TrivialStatus.UNIT
    check_natural("k", k, maximum=MAX_K)
    if cls in CANDIDATE_CLASSES:
        return TrivialStatus.CANDIDATE
    if cls in (ResidueClass.TWO, ResidueClass.THREE) and k == 1:
        return TrivialStatus.PRIME_EXCEPTION
    return TrivialStatus.ALWAYS_COMPOSITE


def trivial_divisor(cls: ResidueClass) -> int | None:
    """Small divisor shared by every member of a non-candidate class."""
    if cls in (ResidueClass.TWO, ResidueClass.FOUR, ResidueClass.SIX):
        return 2
    if cls is ResidueClass.THREE:
        return 3
    return None
