"""Full prime listing from the wheel representation and the composite-index table."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MAX_SIEVE_LIMIT, check_natural
from .table import CompositeIndexTable, build_composite_index_table


@dataclass
class PrimeList:
    limit: int
    primes: list[int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


def wheel_kmax(limit: int) -> int:
    """Smallest kmax whose wheel block covers every candidate <= limit."""
    return -(-(limit + 1) // 6)


def primes_from_table(limit: int, table: CompositeIndexTable) -> list[int]:
    kmax = wheel_kmax(limit)
    if kmax > table.kmax:
        raise ValueError(f"table kmax {table.kmax} too small for limit {limit}")
    k = np.arange(1, kmax + 1, dtype=np.int64)
    # interleave 6k-1 and 6k+1 so the output is ascending
    values = np.column_stack((6 * k - 1, 6 * k + 1)).ravel()
    keep = np.column_stack((~table.a_bits[1 : kmax + 1], ~table.b_bits[1 : kmax + 1])).ravel()
    keep &= values <= limit
    head = [p for p in (2, 3) if p <= limit]
    return head + values[keep].tolist()


def primes_up_to(limit: int) -> PrimeList:
    """All primes <= limit as {2, 3} plus the unmarked wheel candidates.

    >>> primes_up_to(30).primes
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    """
    limit = check_natural("limit", limit, minimum=2, maximum=MAX_SIEVE_LIMIT)
    table = build_composite_index_table(wheel_kmax(limit))
    return PrimeList(limit, primes_from_table(limit, table))
