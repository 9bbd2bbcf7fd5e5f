"""
Wall-clock benchmarks with a log-log power-law fit.

For the primality methods each requested size is replaced by the largest
prime at or below it, so the naive scan always runs to completion.
"""

from __future__ import annotations

import csv
import io
import math
import os
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .oracle import eratosthenes, largest_prime_at_most
from .primality import is_prime_naive, is_prime_table
from .sieve import primes_up_to
from .table import build_composite_index_table

METHODS = ("naive", "table", "eratosthenes-sieve", "wheel-sieve")

# calls per timed repetition; table lookups are too quick to time singly
DEFAULT_NUMBER = {"naive": 1, "table": 2000, "eratosthenes-sieve": 1, "wheel-sieve": 1}


@dataclass
class BenchReport:
    method: str
    sizes: list[int]
    inputs: list[int]
    mean_times: list[float]
    stddev_times: list[float]
    fitted_exponent: float
    r_squared: float


def fit_power_law(xs, ys) -> tuple[float, float]:
    """Least-squares slope of log(y) on log(x), and the fit's R^2."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0 else 1.0
    return float(slope), r2


def _workload(method: str, inputs: list[int]):
    if method == "naive":
        return lambda n: is_prime_naive(n)
    if method == "table":
        # built once, outside every timed region
        table = build_composite_index_table(max(1, (max(inputs) + 1) // 6 + 1))
        return lambda n: is_prime_table(n, table)
    if method == "eratosthenes-sieve":
        return lambda n: eratosthenes(n)
    return lambda n: primes_up_to(n)


def bench(method: str, sizes: list[int], reps: int, number: int | None = None) -> BenchReport:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    sizes = [int(s) for s in sizes]
    if len(sizes) < 3:
        raise ValueError("need at least 3 sizes for a fit")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    if sizes[0] < 5:
        raise ValueError("sizes must be >= 5")
    if reps < 3:
        raise ValueError("reps must be >= 3")
    number = DEFAULT_NUMBER[method] if number is None else number
    if number < 1:
        raise ValueError("number must be >= 1")

    if method in ("naive", "table"):
        inputs = [largest_prime_at_most(s) for s in sizes]
    else:
        inputs = list(sizes)
    fn = _workload(method, inputs)

    means, stds = [], []
    for n in inputs:
        fn(n)  # warm-up, discarded
        samples = []
        for _ in range(reps):
            t0 = time.perf_counter()
            for _ in range(number):
                fn(n)
            samples.append((time.perf_counter() - t0) / number)
        means.append(statistics.fmean(samples))
        stds.append(statistics.stdev(samples))

    slope, r2 = fit_power_law(inputs, means)
    if not math.isfinite(slope):
        raise RuntimeError("power-law fit did not converge")
    return BenchReport(method, sizes, inputs, means, stds, slope, r2)


def write_bench_report(report: BenchReport, out: str | os.PathLike | io.TextIOBase) -> None:
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_bench_report(report, f)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("method", "size", "mean_seconds", "stddev_seconds"))
    for size, m, s in zip(report.sizes, report.mean_times, report.stddev_times):
        w.writerow((report.method, size, f"{m:.6e}", f"{s:.6e}"))
    out.write(f"# fitted_exponent={report.fitted_exponent:.4f} r2={report.r_squared:.4f}\n")
