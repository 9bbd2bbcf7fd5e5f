"""
Classical reference implementations.

Kept free of any wheel or selector logic so that agreement with them is
meaningful evidence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import MAX_SIEVE_LIMIT, check_natural
from .sieve import PrimeList


class OracleKind(enum.Enum):
    PRIME = "PRIME"
    COMPOSITE = "COMPOSITE"
    UNIT = "UNIT"


@dataclass(frozen=True)
class OracleVerdict:
    verdict: OracleKind
    smallest_factor: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.verdict is OracleKind.PRIME


def eratosthenes_flags(limit: int) -> bytearray:
    """flags[n] == 1 iff n is prime, for 0 <= n <= limit."""
    limit = check_natural("limit", limit, minimum=0, maximum=MAX_SIEVE_LIMIT)
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"[: min(2, limit + 1)]
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return flags


def eratosthenes(limit: int) -> PrimeList:
    flags = eratosthenes_flags(limit)
    return PrimeList(limit, [n for n, f in enumerate(flags) if f])


def trial_division(n: int) -> OracleVerdict:
    n = check_natural("n", n)
    if n == 1:
        return OracleVerdict(OracleKind.UNIT)
    for m in range(2, math.isqrt(n) + 1):
        if n % m == 0:
            return OracleVerdict(OracleKind.COMPOSITE, m)
    return OracleVerdict(OracleKind.PRIME)


def largest_prime_at_most(n: int) -> int:
    n = check_natural("n", n, minimum=2)
    while not trial_division(n).is_prime:
        n -= 1
    return n
