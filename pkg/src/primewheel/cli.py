"""Command-line entry point: ``primewheel <subcommand> ...``.

Exit status: 0 on success (a COMPOSITE verdict is a success), 2 on usage or
validation errors, 3 on range rejections, 4 on table-file errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys

from . import bench as bench_mod
from .counting import count_report, format_ratio, write_count_report
from .errors import RangeError, TableFormatError
from .oracle import OracleKind, eratosthenes, trial_division
from .primality import PrimalityVerdict, Verdict, is_prime_naive, is_prime_table
from .residue import classify, lemma_status
from .selectors import SelectorKind, iter_selector_pairs
from .sieve import primes_up_to, wheel_kmax
from .table import build_composite_index_table, load_table, save_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_FORMAT = 4


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


def verdict_line(n: int, method: str, table_file: str | None = None) -> str:
    """The line ``is-prime`` prints for n."""
    if n == 1:
        return Verdict.UNIT.value
    if method == "oracle":
        v = trial_division(n)
        if v.verdict is OracleKind.COMPOSITE:
            return f"COMPOSITE = {v.smallest_factor} x {n // v.smallest_factor}"
        return v.verdict.value
    if method == "naive":
        return str(is_prime_naive(n))
    if table_file is not None:
        table = load_table(table_file)
    else:
        table = build_composite_index_table(max(1, wheel_kmax(n)))
    result: PrimalityVerdict = is_prime_table(n, table, witness=True)
    return str(result)


def _cmd_classify(args) -> int:
    c = classify(args.n)
    status = lemma_status(c.cls, c.k)
    print(f"{c} {status.value}")
    return EXIT_OK


def _cmd_is_prime(args) -> int:
    if args.n < 1:
        raise RangeError(f"n must be >= 1, got {args.n}")
    print(verdict_line(args.n, args.method, args.table_file))
    return EXIT_OK


def _cmd_primes(args) -> int:
    if args.method == "wheel":
        primes = primes_up_to(args.limit).primes
    else:
        primes = eratosthenes(args.limit).primes
    with _output(args.out) as f:
        f.write("".join(f"{p}\n" for p in primes))
    return EXIT_OK


def _cmd_selectors(args) -> int:
    kinds = list(SelectorKind) if args.kind == "all" else [SelectorKind(args.kind.upper())]
    with _output(args.out) as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(("kind", "i", "j", "k", "value"))
        for kind in kinds:
            sign = -1 if kind is SelectorKind.S1 else 1
            for i, j, k in iter_selector_pairs(kind, args.kmax):
                w.writerow((kind.value, i, j, k, 6 * k + sign))
    return EXIT_OK


def _cmd_build_table(args) -> int:
    table = build_composite_index_table(args.kmax)
    save_table(table, args.out)
    print(
        f"kmax={table.kmax} a_composite={int(table.a_bits.sum())} "
        f"b_composite={int(table.b_bits.sum())} -> {args.out}"
    )
    return EXIT_OK


def _cmd_count_report(args) -> int:
    rows = count_report(args.kmax)
    write_count_report(rows, args.out)
    last = rows[-1]
    print(
        f"k={last.k} exact_A={last.exact_A} paper_A={last.paper_A} "
        f"exact_B={last.exact_B} paper_B={last.paper_B} "
        f"ratio_BA={format_ratio(last.ratio_BA)} paper_ratio_BA={format_ratio(last.paper_ratio_BA) or 'undefined'}"
    )
    return EXIT_OK


def _cmd_bench(args) -> int:
    report = bench_mod.bench(args.method, args.sizes, args.reps, args.number)
    with _output(args.out) as f:
        bench_mod.write_bench_report(report, f)
    return EXIT_OK


def _size_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primewheel", description="6k+/-1 wheel primes, selectors and primality tests")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="residue class and wheel index of n")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("is-prime", help="decide primality of n")
    s.add_argument("n", type=int)
    s.add_argument("--method", choices=("naive", "table", "oracle"), default="table")
    s.add_argument("--table-file", metavar="PATH")
    s.set_defaults(func=_cmd_is_prime)

    s = sub.add_parser("primes", help="list primes up to a limit")
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--method", choices=("wheel", "eratosthenes"), default="wheel")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=_cmd_primes)

    s = sub.add_parser("selectors", help="CSV of selector pairs with k <= kmax")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--kind", choices=("s1", "s2", "s3", "all"), default="all")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=_cmd_selectors)

    s = sub.add_parser("build-table", help="write a composite-index table file")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--out", metavar="PATH", required=True)
    s.set_defaults(func=_cmd_build_table)

    s = sub.add_parser("count-report", help="exact vs closed-form prime counts per k")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--out", metavar="PATH", required=True)
    s.set_defaults(func=_cmd_count_report)

    s = sub.add_parser("bench", help="time a method over sizes and fit a power law")
    s.add_argument("--method", choices=bench_mod.METHODS, required=True)
    s.add_argument("--sizes", type=_size_list, required=True, metavar="CSVLIST")
    s.add_argument("--reps", type=int, required=True)
    s.add_argument("--number", type=int, help="calls per timed repetition")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=_cmd_bench)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except TableFormatError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except RangeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RANGE
    except (ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
