"""Command-line entry point: bench, verify, trace, and sort workflows.

Exit codes: 0 success, 1 verification divergence or I/O failure, 2 bad
flags or arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bench import CONFIGS, BenchConfig, run_bench, write_csv
from .core import BlackWhiteArray
from .oracle import run_equivalence


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwa",
        description="Segmented two-array ordered multiset: benchmarks, "
                    "model-based verification, op-script tracing, sorting.")
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="measure amortized op cost, write CSV")
    bench.add_argument("--min-exp", type=int, default=10, metavar="M")
    bench.add_argument("--max-exp", type=int, default=14, metavar="X")
    bench.add_argument("--ops", default="insert,search,delete", metavar="LIST",
                       help="comma-separated subset of insert,search,delete")
    bench.add_argument("--config", choices=CONFIGS, default="random")
    bench.add_argument("--trials", type=int, default=1000, metavar="T",
                       help="random-configuration trials per size")
    bench.add_argument("--hit-ratio", type=float, default=0.5, metavar="H")
    bench.add_argument("--seed", type=int, default=0, metavar="S")
    bench.add_argument("--out", required=True, metavar="FILE")
    bench.set_defaults(func=_cmd_bench)

    verify = sub.add_parser("verify", help="replay a random workload against "
                                           "the reference model")
    verify.add_argument("--size-exp", type=int, default=14, metavar="E",
                        help="capacity exponent of the structure under test")
    verify.add_argument("--ops", type=int, default=100_000, metavar="N",
                        help="operation count")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    verify.add_argument("--hit-ratio", type=float, default=0.5, metavar="H")
    verify.set_defaults(func=_cmd_verify)

    trace = sub.add_parser("trace", help="replay an op script, dumping "
                                         "segments after each step")
    trace.add_argument("--script", required=True, metavar="FILE")
    trace.set_defaults(func=_cmd_trace)

    sort = sub.add_parser("sort", help="read whitespace-separated integers on "
                                       "stdin, print them sorted")
    sort.set_defaults(func=_cmd_sort)
    return parser


def _cmd_bench(args: argparse.Namespace) -> int:
    ops = tuple(s.strip() for s in args.ops.split(",") if s.strip())
    try:
        cfg = BenchConfig(min_exp=args.min_exp, max_exp=args.max_exp, ops=ops,
                          config=args.config, trials=args.trials,
                          hit_ratio=args.hit_ratio, seed=args.seed)
    except ValueError as exc:
        print(f"bwa bench: {exc}", file=sys.stderr)
        return 2
    rows = run_bench(cfg)
    try:
        write_csv(rows, args.out)
    except OSError as exc:
        print(f"bwa bench: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.size_exp < 1 or args.ops < 0 or not 0.0 <= args.hit_ratio <= 1.0:
        print("bwa verify: size-exp must be >= 1, ops >= 0, hit-ratio in [0, 1]",
              file=sys.stderr)
        return 2
    divergence = run_equivalence(seed=args.seed, n=args.ops,
                                 hit_ratio=args.hit_ratio,
                                 cap_exp=args.size_exp)
    if divergence is None:
        print(f"ok: {args.ops} ops, no divergence")
        return 0
    print(f"divergence: {divergence}")
    return 1


def _cmd_trace(args: argparse.Namespace) -> int:
    try:
        text = Path(args.script).read_text()
    except OSError as exc:
        print(f"bwa trace: {exc}", file=sys.stderr)
        return 1
    bwa = BlackWhiteArray(4)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in ("insert", "search", "delete"):
            print(f"bwa trace: line {lineno}: cannot parse {raw!r} "
                  "(expected: insert V | search V | delete V)", file=sys.stderr)
            return 1
        op, token = parts
        try:
            value = int(token)
        except ValueError:
            print(f"bwa trace: line {lineno}: {token!r} is not an integer",
                  file=sys.stderr)
            return 1
        if op == "insert":
            bwa.insert(value)
            print(f"> insert {value}")
        elif op == "search":
            idx = bwa.search(value)
            verdict = "miss" if idx is None else f"hit @{idx}"
            print(f"> search {value} -> {verdict}")
        else:
            idx = bwa.delete(value)
            verdict = "miss" if idx is None else f"hit @{idx}"
            print(f"> delete {value} -> {verdict}")
        print(bwa.dump() or "(empty)")
    return 0


def _cmd_sort(args: argparse.Namespace) -> int:
    tokens = sys.stdin.read().split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        print(f"bwa sort: {exc}", file=sys.stderr)
        return 1
    bwa = BlackWhiteArray(10)
    insert = bwa.insert
    for v in values:
        insert(v)
    out = sys.stdout
    out.write(" ".join(map(str, bwa.iter_sorted())))
    out.write("\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
