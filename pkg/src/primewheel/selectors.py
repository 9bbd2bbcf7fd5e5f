"""
Selection rules over wheel indices.

Products of two candidates land back in A or B, and the wheel index of the
product is a quadratic form in the indices of the factors::

    S1(i, j) = 6ij - i + j    (6i+1)(6j-1) = 6*S1 - 1    -> composite in A
    S2(i, j) = 6ij + i + j    (6i+1)(6j+1) = 6*S2 + 1    -> composite in B
    S3(i, j) = 6ij - i - j    (6i-1)(6j-1) = 6*S3 + 1    -> composite in B

A wheel index k is composite in A exactly when k is in the image of S1, and
composite in B exactly when k is in the image of S2 or S3.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import MAX_K, RangeError, check_natural
from .residue import ResidueClass, value_of


class SelectorKind(enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"

    @property
    def target(self) -> ResidueClass:
        return ResidueClass.A if self is SelectorKind.S1 else ResidueClass.B

    @property
    def symmetric(self) -> bool:
        return self is not SelectorKind.S1


def kinds_for(cls: ResidueClass) -> tuple[SelectorKind, ...]:
    if cls is ResidueClass.A:
        return (SelectorKind.S1,)
    if cls is ResidueClass.B:
        return (SelectorKind.S3, SelectorKind.S2)
    raise ValueError(f"selection rules act on classes A and B only, not {cls.value}")


@dataclass(frozen=True)
class SelectorWitness:
    kind: SelectorKind
    i: int
    j: int
    k: int
    factor_lo: int
    factor_hi: int

    @property
    def value(self) -> int:
        return self.factor_lo * self.factor_hi


def _factors(kind: SelectorKind, i: int, j: int) -> tuple[int, int]:
    if kind is SelectorKind.S1:
        return 6 * i + 1, 6 * j - 1
    if kind is SelectorKind.S2:
        return 6 * i + 1, 6 * j + 1
    return 6 * i - 1, 6 * j - 1


def make_witness(kind: SelectorKind, i: int, j: int) -> SelectorWitness:
    """Build the witness for the pair (i, j); symmetric rules are stored with i <= j."""
    if kind.symmetric and i > j:
        i, j = j, i
    k = selector_value(kind, i, j)
    lo, hi = sorted(_factors(kind, i, j))
    return SelectorWitness(kind, i, j, k, lo, hi)


def _checked(k: int) -> int:
    if k > MAX_K:
        raise RangeError(f"selector value {k} exceeds the wheel index ceiling {MAX_K}")
    return k


def selector_value(kind: SelectorKind, i: int, j: int) -> int:
    check_natural("i", i)
    check_natural("j", j)
    if kind is SelectorKind.S1:
        return _checked(6 * i * j - i + j)
    if kind is SelectorKind.S2:
        return _checked(6 * i * j + i + j)
    return _checked(6 * i * j - i - j)


def selector_value_shifted(kind: SelectorKind, r: int, s: int) -> int:
    """Selector in zero-based coordinates r = i - 1, s = j - 1."""
    check_natural("r", r, minimum=0)
    check_natural("s", s, minimum=0)
    if kind is SelectorKind.S1:
        return _checked(6 + 7 * s + (5 + 6 * s) * r)
    if kind is SelectorKind.S2:
        return _checked(8 + 7 * s + (7 + 6 * s) * r)
    return _checked(4 + 5 * s + (5 + 6 * s) * r)


def _row(kind: SelectorKind, i: int) -> tuple[int, int]:
    """(value at j=1, increment per unit j) for row i of a rule."""
    if kind is SelectorKind.S1:
        return 5 * i + 1, 6 * i + 1
    if kind is SelectorKind.S2:
        return 7 * i + 1, 6 * i + 1
    return 5 * i - 1, 6 * i - 1


def iter_selector_pairs(kind: SelectorKind, kmax: int) -> Iterator[tuple[int, int, int]]:
    """Yield every (i, j, k) with i, j >= 1 and k = kind(i, j) <= kmax.

    Rows are walked in increasing i; each row stops once its value passes
    kmax, and the walk stops at the first row whose j=1 value does.
    """
    check_natural("kmax", kmax, maximum=MAX_K)
    i = 1
    while True:
        k, step = _row(kind, i)
        if k > kmax:
            return
        j = 1
        while k <= kmax:
            yield i, j, k
            k += step
            j += 1
        i += 1


def enumerate_selector_indices(kind: SelectorKind, kmax: int) -> list[int]:
    return sorted({k for _, _, k in iter_selector_pairs(kind, kmax)})


def find_composite_witness(cls: ResidueClass, k: int) -> SelectorWitness | None:
    """Find the selector pair whose index equals k, with the smallest factor.

    Row t of each rule fixes one factor (6t-1 or 6t+1) and the partner index
    is solved for directly. Rows are visited by increasing factor, so the
    first hit has the smallest factor; the walk ends once that factor
    squared passes the candidate itself.
    """
    kinds_for(cls)
    n = value_of(cls, k)
    t = 1
    while (6 * t - 1) ** 2 <= n:
        lo = 6 * t - 1
        hi = 6 * t + 1
        if cls is ResidueClass.A:
            # S1 with j = t: k = (6t-1) i + t
            q, rem = divmod(k - t, lo)
            if rem == 0 and q >= 1:
                return make_witness(SelectorKind.S1, q, t)
            # S1 with i = t: k = (6t+1) j - t
            q, rem = divmod(k + t, hi)
            if rem == 0 and q >= 1:
                return make_witness(SelectorKind.S1, t, q)
        else:
            # S3 with i = t: k = (6t-1) j - t
            q, rem = divmod(k + t, lo)
            if rem == 0 and q >= 1:
                return make_witness(SelectorKind.S3, t, q)
            # S2 with i = t: k = (6t+1) j + t
            q, rem = divmod(k - t, hi)
            if rem == 0 and q >= 1:
                return make_witness(SelectorKind.S2, t, q)
        t += 1
    return None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def paper_index_bounds(kind: SelectorKind, k: int) -> tuple[int, int]:
    """Rectangular (i_max, j_max) estimate for rule ``kind`` at index k.

    These are the closed-form estimates used by the counting formulas. They
    are neither tight nor guaranteed to enclose every solution; enumeration
    never relies on them.
    """
    check_natural("k", k, maximum=MAX_K)
    if kind is SelectorKind.S1:
        return (k - 1) // 5, (k + 1) // 7
    if kind is SelectorKind.S2:
        return (k - 1) // 7, _ceil_div(k - 1, 7)
    return (k + 1) // 5, _ceil_div(k + 1, 5)


def paper_selector_count(kind: SelectorKind, k: int) -> int:
    i_max, j_max = paper_index_bounds(kind, k)
    return i_max * j_max
