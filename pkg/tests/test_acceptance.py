"""Exit criteria. Each test records one PASS/FAIL line, shown in the terminal summary."""

import io
import time
from fractions import Fraction

import pytest

from primewheel.bench import bench
from primewheel.counting import (
    count_report,
    cut_ratio,
    exact_prime_count,
    paper_prime_count,
    theorem4_counts,
    write_count_report,
)
from primewheel.errors import ChecksumMismatch, TableFormatError
from primewheel.oracle import eratosthenes, eratosthenes_flags
from primewheel.residue import ResidueClass as RC
from primewheel.selectors import find_composite_witness
from primewheel.sieve import primes_up_to
from primewheel.table import build_composite_index_table, deserialize_table, serialize_table

SIGN_TABLE = [
    (5, "-"), (7, "+"), (11, "-"), (13, "+"), (17, "-"), (19, "+"), (23, "-"), (29, "-"),
    (31, "+"), (37, "+"), (41, "-"), (43, "+"), (47, "-"), (53, "-"), (59, "-"), (61, "+"),
]


def test_oracle_equivalence_1e6(criterion):
    t0 = time.perf_counter()
    wheel = primes_up_to(10**6).primes
    elapsed = time.perf_counter() - t0
    reference = eratosthenes(10**6).primes
    ok = wheel == reference and len(wheel) == 78498 and elapsed < 5.0
    assert criterion(ok, f"{len(wheel)} primes, identical={wheel == reference}, {elapsed:.3f}s (< 5s)")


@pytest.mark.slow
def test_oracle_equivalence_1e7(criterion):
    wheel = primes_up_to(10**7).primes
    reference = eratosthenes(10**7).primes
    assert criterion(wheel == reference and len(wheel) == 664579, f"{len(wheel)} primes")


def test_golden_tables_k_1_to_10(criterion):
    table = build_composite_index_table(10)
    bold = {6 * k - 1 for k in table.a_indices()} | {6 * k + 1 for k in table.b_indices()}
    by_witness = {
        w.value for k in range(1, 11) for cls in (RC.A, RC.B) if (w := find_composite_witness(cls, k)) is not None
    }
    listing = [(p, "-" if p % 6 == 5 else "+") for p in primes_up_to(61).primes if p > 3]
    ok = bold == by_witness == {25, 35, 49, 55} and listing == SIGN_TABLE
    assert criterion(ok, f"composites={sorted(bold)}, sign listing of {len(listing)} primes matches={listing == SIGN_TABLE}")


def test_selection_rule_completeness_1e5(criterion):
    K = 10**5
    t0 = time.perf_counter()
    flags = eratosthenes_flags(6 * K + 1)
    mismatches = []
    for k in range(1, K + 1):
        if (find_composite_witness(RC.A, k) is not None) != (not flags[6 * k - 1]):
            mismatches.append(("A", k))
        if (find_composite_witness(RC.B, k) is not None) != (not flags[6 * k + 1]):
            mismatches.append(("B", k))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 30.0
    assert criterion(ok, f"k<=1e5, mismatches={len(mismatches)}, {elapsed:.1f}s (< 30s)")


def test_cut_counts_and_ratio(criterion):
    c = theorem4_counts(10)
    ratios = {s: cut_ratio(s) for s in (1, 10, 10**3, 10**4)}
    ok = (c.a_cuts, c.b_cuts) == (100, 110) and all(r == 1 + Fraction(1, s) for s, r in ratios.items())
    assert criterion(ok, f"counts(10)=({c.a_cuts}, {c.b_cuts}), cut_ratio(1e4)-1={ratios[10**4] - 1}")


def test_closed_form_counts_audited(criterion):
    checks = [
        (paper_prime_count(RC.A, 10), exact_prime_count(RC.A, 10), 9, 9),
        (paper_prime_count(RC.B, 10), exact_prime_count(RC.B, 10), 2, 7),
        (paper_prime_count(RC.A, 20), exact_prime_count(RC.A, 20), 11, 15),
    ]
    values_ok = all((p, e) == (ep, ee) for p, e, ep, ee in checks)
    buf = io.StringIO()
    write_count_report(count_report(20), buf)
    lines = buf.getvalue().splitlines()
    rows_ok = (
        "10,59,0,61,0,9,9,0,7,2,5,0.777777777778" in lines
        and "20,119,1,121,1,15,11,4,13,-6,19,0.866666666667" in lines
    )
    last = count_report(10**5)[-1]
    ratio = float(last.ratio_BA)
    ok = values_ok and rows_ok and 0.9 <= ratio <= 1.1
    assert criterion(
        ok,
        f"(closed-form, exact)={[(p, e) for p, e, _, _ in checks]}, csv rows ok={rows_ok}, "
        f"exact_B/exact_A at k=1e5 = {ratio:.6f} in [0.9, 1.1]",
    )


def test_naive_scan_quadratic(criterion):
    t0 = time.perf_counter()
    report = bench("naive", [10**3, 10**4, 10**5], reps=3)
    elapsed = time.perf_counter() - t0
    ok = 1.6 <= report.fitted_exponent <= 2.2 and elapsed < 120.0
    assert criterion(
        ok, f"inputs={report.inputs}, exponent={report.fitted_exponent:.3f} in [1.6, 2.2], r2={report.r_squared:.4f}, {elapsed:.1f}s"
    )


def test_table_lookup_constant_time(criterion):
    t0 = time.perf_counter()
    big = build_composite_index_table(10**6)
    build_s = time.perf_counter() - t0
    report = bench("table", [10**3, 10**4, 10**5, 10**6], reps=5)
    spread = max(report.mean_times) / min(report.mean_times)
    ok = spread < 3.0 and build_s < 60.0 and big.kmax == 10**6
    assert criterion(ok, f"lookup max/min={spread:.2f} (< 3), build kmax=1e6 in {build_s:.2f}s (< 60s)")


def test_serialization_round_trip(criterion):
    identical = {}
    for kmax in (1, 7, 8, 1000):
        t = build_composite_index_table(kmax)
        raw = serialize_table(t)
        back = deserialize_table(raw)
        identical[kmax] = back == t and serialize_table(back) == raw

    raw = serialize_table(build_composite_index_table(1000))
    payload_flips_caught = 0
    payload_bits = (len(raw) - 18) * 8
    for bit in range(payload_bits):
        corrupt = bytearray(raw)
        corrupt[14 + bit // 8] ^= 1 << (bit % 8)
        try:
            deserialize_table(bytes(corrupt))
        except ChecksumMismatch:
            payload_flips_caught += 1
    all_flips_caught = True
    for pos in range(len(raw)):
        corrupt = bytearray(raw)
        corrupt[pos] ^= 0x01
        try:
            deserialize_table(bytes(corrupt))
            all_flips_caught = False
        except TableFormatError:
            pass
    ok = all(identical.values()) and payload_flips_caught == payload_bits and all_flips_caught
    assert criterion(
        ok, f"round-trip={identical}, CRC caught {payload_flips_caught}/{payload_bits} payload bit flips"
    )
