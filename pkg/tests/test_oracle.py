import math

import pytest
from hypothesis import given, strategies as st

from primewheel.errors import RangeError
from primewheel.oracle import OracleKind, eratosthenes, largest_prime_at_most, trial_division


@pytest.mark.parametrize("limit, expected", [(10, [2, 3, 5, 7]), (1, []), (2, [2]), (0, []), (3, [2, 3])])
def test_eratosthenes_examples(limit, expected):
    assert eratosthenes(limit).primes == expected


def test_eratosthenes_known_counts():
    # pi(10^k) for k = 2..5
    assert [len(eratosthenes(10**k)) for k in range(2, 6)] == [25, 168, 1229, 9592]


def test_trial_division_examples():
    v = trial_division(91)
    assert v.verdict is OracleKind.COMPOSITE and v.smallest_factor == 7
    assert trial_division(97).verdict is OracleKind.PRIME
    assert trial_division(1).verdict is OracleKind.UNIT
    with pytest.raises(RangeError):
        trial_division(0)


def test_trial_division_agrees_with_sieve():
    primes = set(eratosthenes(10**5).primes)
    for n in range(1, 10**5 + 1):
        assert trial_division(n).is_prime == (n in primes), n


@given(st.integers(min_value=2, max_value=10**9))
def test_composite_factor_invariant(n):
    v = trial_division(n)
    if v.verdict is OracleKind.COMPOSITE:
        f = v.smallest_factor
        assert 1 < f <= math.isqrt(n) and n % f == 0
        assert all(n % m for m in range(2, f))
    else:
        assert v.smallest_factor is None


def test_largest_prime_at_most():
    assert [largest_prime_at_most(n) for n in (10**3, 10**4, 10**5, 10**6)] == [997, 9973, 99991, 999983]
    assert largest_prime_at_most(7) == 7
