"""
Closed-form cut and prime counts next to exact counts.

The closed forms estimate primes in A and B as k minus a rectangular count
of selector pairs. They ignore duplicate selector values and pairs that do
not land at or below k, so they drift far from the exact counts; the report
records that drift as signed deviations.
"""

from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import MAX_K, check_natural
from .residue import ResidueClass
from .selectors import SelectorKind, paper_selector_count
from .table import CompositeIndexTable, build_composite_index_table

CSV_HEADER = (
    "k", "n_A", "a_composite", "n_B", "b_composite",
    "exact_A", "paper_A", "dev_A", "exact_B", "paper_B", "dev_B", "ratio_BA",
)


@dataclass(frozen=True)
class CutCounts:
    s: int
    a_cuts: int
    b_cuts: int


@dataclass(frozen=True)
class CountReportRow:
    k: int
    a_composite: bool
    b_composite: bool
    exact_A: int
    paper_A: int
    exact_B: int
    paper_B: int

    @property
    def n_A(self) -> int:
        return 6 * self.k - 1

    @property
    def n_B(self) -> int:
        return 6 * self.k + 1

    @property
    def dev_A(self) -> int:
        return self.exact_A - self.paper_A

    @property
    def dev_B(self) -> int:
        return self.exact_B - self.paper_B

    @property
    def ratio_BA(self) -> Fraction:
        return Fraction(self.exact_B, self.exact_A)

    @property
    def paper_ratio_BA(self) -> Fraction | None:
        """Ratio of the closed-form counts; None where the A formula is zero."""
        if self.paper_A == 0:
            return None
        return Fraction(self.paper_B, self.paper_A)


def theorem4_counts(s: int) -> CutCounts:
    """Cuts produced by the first s elements of A and B, counted with multiplicity.

    A-cuts are ordered A x B products (s * s). B-cuts are unordered pairs with
    repetition drawn from A, plus the same from B: 2 * C(s+1, 2) = s**2 + s.
    """
    s = check_natural("s", s, maximum=math.isqrt(MAX_K) - 1)
    return CutCounts(s, s * s, 2 * math.comb(s + 1, 2))


def cut_ratio(s: int) -> Fraction:
    c = theorem4_counts(s)
    return Fraction(c.b_cuts, c.a_cuts)


def paper_prime_count(cls: ResidueClass, k: int) -> int:
    """Closed-form prime count of a class up to wheel index k; may go negative."""
    if cls is ResidueClass.A:
        return k - paper_selector_count(SelectorKind.S1, k)
    if cls is ResidueClass.B:
        return k - paper_selector_count(SelectorKind.S2, k) - paper_selector_count(SelectorKind.S3, k)
    raise ValueError(f"prime counts are defined for classes A and B only, not {cls.value}")


def _table_for(k: int, table: CompositeIndexTable | None) -> CompositeIndexTable:
    if table is None or table.kmax < k:
        return build_composite_index_table(k)
    return table


def exact_prime_count(cls: ResidueClass, k: int, table: CompositeIndexTable | None = None) -> int:
    """Number of k' <= k whose candidate in ``cls`` has no selector witness."""
    k = check_natural("k", k)
    table = _table_for(k, table)
    if cls is ResidueClass.A:
        bits = table.a_bits
    elif cls is ResidueClass.B:
        bits = table.b_bits
    else:
        raise ValueError(f"prime counts are defined for classes A and B only, not {cls.value}")
    return k - int(np.count_nonzero(bits[1 : k + 1]))


def count_report(kmax: int, table: CompositeIndexTable | None = None) -> list[CountReportRow]:
    kmax = check_natural("kmax", kmax)
    table = _table_for(kmax, table)
    a = table.a_bits[1 : kmax + 1]
    b = table.b_bits[1 : kmax + 1]
    ks = np.arange(1, kmax + 1)
    exact_a = (ks - np.cumsum(a)).tolist()
    exact_b = (ks - np.cumsum(b)).tolist()
    return [
        CountReportRow(
            k=k,
            a_composite=bool(a[k - 1]),
            b_composite=bool(b[k - 1]),
            exact_A=exact_a[k - 1],
            paper_A=paper_prime_count(ResidueClass.A, k),
            exact_B=exact_b[k - 1],
            paper_B=paper_prime_count(ResidueClass.B, k),
        )
        for k in range(1, kmax + 1)
    ]


def format_ratio(x: Fraction | None) -> str:
    return "" if x is None else format(float(x), ".12g")


def write_count_report(rows: Iterable[CountReportRow], out: str | os.PathLike | io.TextIOBase) -> None:
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_count_report(rows, f)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow((
            r.k, r.n_A, int(r.a_composite), r.n_B, int(r.b_composite),
            r.exact_A, r.paper_A, r.dev_A, r.exact_B, r.paper_B, r.dev_B,
            format_ratio(r.ratio_BA),
        ))
