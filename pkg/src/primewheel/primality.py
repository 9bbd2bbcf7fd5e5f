"""
Primality tests over the 6k +/- 1 wheel.

``is_prime_naive`` scans the zero-based selector grids cell by cell and is
quadratic in n for prime inputs. ``is_prime_table`` answers from a
precomputed :class:`~primewheel.table.CompositeIndexTable` in constant time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfTableRange, check_natural
from .residue import ResidueClass, classify, trivial_divisor
from .selectors import SelectorKind, SelectorWitness, find_composite_witness, make_witness
from .table import CompositeIndexTable


class Verdict(enum.Enum):
    PRIME = "PRIME"
    COMPOSITE = "COMPOSITE"
    UNIT = "UNIT"


@dataclass(frozen=True)
class PrimalityVerdict:
    n: int
    verdict: Verdict
    witness: SelectorWitness | None = None
    # 2 or 3 when the residue class alone decides compositeness
    small_divisor: int | None = None

    @property
    def factors(self) -> tuple[int, int] | None:
        if self.witness is not None:
            return self.witness.factor_lo, self.witness.factor_hi
        if self.small_divisor is not None:
            return self.small_divisor, self.n // self.small_divisor
        return None

    def __str__(self) -> str:
        f = self.factors
        if self.verdict is Verdict.COMPOSITE and f is not None:
            return f"COMPOSITE = {f[0]} x {f[1]}"
        return self.verdict.value


def _residue_verdict(n: int) -> tuple[PrimalityVerdict | None, ResidueClass, int]:
    """Settle n from its residue class alone when possible."""
    c = classify(n)
    if n in (2, 3):
        return PrimalityVerdict(n, Verdict.PRIME), c.cls, c.k
    d = trivial_divisor(c.cls)
    if d is not None:
        return PrimalityVerdict(n, Verdict.COMPOSITE, small_divisor=d), c.cls, c.k
    return None, c.cls, c.k


def naive_scan_bounds(kind: SelectorKind, k: int) -> tuple[int, int]:
    """Loop limits the naive test uses for rule ``kind`` at wheel index k.

    S1 returns (r_max, s_max) of the full rectangle. S3 returns (l_max, m_max)
    and S2 returns (c_max, d_max) of the upper triangles. Negative limits
    denote an empty range.
    """
    if kind is SelectorKind.S1:
        return (k - 6) // 5, (k - 6) // 7
    if kind is SelectorKind.S3:
        l_max = (k - 4) // 5
        return l_max, l_max + 1
    c_max = (k - 8) // 7
    return c_max, c_max + 1


def _scan_a(k: int) -> SelectorWitness | None:
    r_max, s_max = naive_scan_bounds(SelectorKind.S1, k)
    for s in range(s_max + 1):
        base, step = 6 + 7 * s, 5 + 6 * s
        for r in range(r_max + 1):
            if base + step * r == k:
                return make_witness(SelectorKind.S1, r + 1, s + 1)
    return None


def _scan_b(k: int) -> SelectorWitness | None:
    l_max, m_max = naive_scan_bounds(SelectorKind.S3, k)
    for m in range(m_max + 1):
        base, step = 4 + 5 * m, 5 + 6 * m
        for l in range(m, l_max + 1):
            if base + step * l == k:
                return make_witness(SelectorKind.S3, l + 1, m + 1)
    c_max, d_max = naive_scan_bounds(SelectorKind.S2, k)
    for d in range(d_max + 1):
        base, step = 8 + 7 * d, 7 + 6 * d
        for c in range(d, c_max + 1):
            if base + step * c == k:
                return make_witness(SelectorKind.S2, c + 1, d + 1)
    return None


def is_prime_naive(n: int) -> PrimalityVerdict:
    """Decide primality by exhaustive scan of the selector grids.

    No early exit on overshoot: a prime input visits every cell, so the cost
    grows as n**2. Composite inputs stop at the first matching cell.
    """
    n = check_natural("n", n, minimum=2)
    decided, cls, k = _residue_verdict(n)
    if decided is not None:
        return decided
    witness = _scan_a(k) if cls is ResidueClass.A else _scan_b(k)
    if witness is None:
        return PrimalityVerdict(n, Verdict.PRIME)
    return PrimalityVerdict(n, Verdict.COMPOSITE, witness=witness)


def is_prime_table(n: int, table: CompositeIndexTable, *, witness: bool = False) -> PrimalityVerdict:
    """Decide primality with one bitmap read.

    Raises :class:`OutOfTableRange` when n's wheel index exceeds
    ``table.kmax``. With ``witness=True`` a composite verdict is annotated
    with its selector pair, found outside the constant-time path.
    """
    n = check_natural("n", n, minimum=2)
    decided, cls, k = _residue_verdict(n)
    if decided is not None:
        return decided
    if k > table.kmax:
        raise OutOfTableRange(k, table.kmax)
    bits = table.a_bits if cls is ResidueClass.A else table.b_bits
    if not bits[k]:
        return PrimalityVerdict(n, Verdict.PRIME)
    w = find_composite_witness(cls, k) if witness else None
    return PrimalityVerdict(n, Verdict.COMPOSITE, witness=w)
