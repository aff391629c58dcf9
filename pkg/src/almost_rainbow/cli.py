"""Command-line front end.

Exit codes: 0 pass, 1 property violated, 2 input or build error, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from .calibration import evaluate_order, exceptional_finding
from .coloring import (
    ColoringMatrix,
    CornerMismatch,
    InterpretationConfig,
    MatrixParseError,
    UnsupportedOrder,
    build_matrix,
    classify,
)
from .search import DEFAULT_BUDGET, min_colors_exhaustive
from .verifier import DEFAULT_VIOLATION_LIMIT, verify_fast, verify_naive

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

NAIVE_BENCH_MAX_N = 60


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _config(args) -> InterpretationConfig:
    return InterpretationConfig.from_name(args.interpretation)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def serialize(mat: ColoringMatrix, fmt: str) -> str:
    return mat.to_csv() if fmt == "csv" else mat.to_json() + "\n"


def load_matrix(path: str) -> ColoringMatrix:
    """Read a matrix file; JSON if it looks like JSON, CSV otherwise."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return ColoringMatrix.from_json(text)
    return ColoringMatrix.from_csv(text)


# ----------------------------------------------------------------------------- commands


def cmd_generate(args) -> int:
    try:
        mat = build_matrix(args.n, _config(args))
    except (UnsupportedOrder, CornerMismatch) as exc:
        _err(str(exc))
        return EXIT_INPUT
    _write(serialize(mat, args.format), args.out)
    return EXIT_PASS


def cmd_verify(args) -> int:
    try:
        if args.input is not None:
            mat = load_matrix(args.input)
        else:
            mat = build_matrix(args.n, _config(args))
    except (UnsupportedOrder, CornerMismatch, MatrixParseError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except OSError as exc:
        _err(f"cannot read {args.input}: {exc.strerror}")
        return EXIT_INPUT

    if args.algo == "naive":
        report = verify_naive(mat, limit=args.limit)
    elif args.algo == "fast":
        report = verify_fast(mat, limit=args.limit)
    else:
        report = verify_fast(mat, limit=args.limit)
        other = verify_naive(mat, limit=args.limit)
        if other != report:
            _err("naive and fast reports differ")
            print(json.dumps({"fast": report.to_dict(), "naive": other.to_dict()}))
            return EXIT_VIOLATION
    print(report.to_json())
    return EXIT_PASS if report.passed else EXIT_VIOLATION


@dataclass
class SweepRecord:
    n: int
    type_tag: str
    variant: str
    status: str
    colors_used: int
    violations: int
    elapsed: float
    exceptional: bool

    @property
    def counts_toward_exit(self) -> bool:
        return self.type_tag != "Unsupported" and not self.exceptional


def sweep_record(n: int, cfg_name: str = "default") -> SweepRecord:
    cls = classify(n)
    t0 = time.perf_counter()
    st = evaluate_order(n, InterpretationConfig.from_name(cfg_name))
    return SweepRecord(
        n=n,
        type_tag=cls.tag,
        variant=cls.variant,
        status=st.status,
        colors_used=st.colors_used,
        violations=st.violations,
        elapsed=round(time.perf_counter() - t0, 6),
        exceptional=cls.exceptional,
    )


def _sweep_job(job):
    return sweep_record(*job)


def cmd_sweep(args) -> int:
    if args.lo > args.hi:
        _err("--from must not exceed --to")
        return EXIT_INPUT
    orders = [n for n in range(max(args.lo, 1), args.hi + 1) if n % 2 == 0]
    jobs = [(n, args.interpretation) for n in orders]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            records = list(pool.map(_sweep_job, jobs))  # map preserves ascending n
    else:
        records = [_sweep_job(j) for j in jobs]

    lines = "".join(json.dumps(asdict(r)) + "\n" for r in records)
    _write(lines, args.report)

    cfg = InterpretationConfig.from_name(args.interpretation)
    for r in records:
        if r.exceptional and r.status != "pass":
            print("FINDING: " + exceptional_finding(r.n, cfg).summary, file=sys.stderr)
    failed = [r.n for r in records if r.counts_toward_exit and r.status != "pass"]
    if failed:
        _err(f"regular orders failed: {failed}")
        return EXIT_VIOLATION
    return EXIT_PASS


def cmd_search(args) -> int:
    try:
        res = min_colors_exhaustive(
            args.rows, args.cols, q=args.q, max_colors=args.max_colors, budget=args.budget
        )
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    print(res.to_json())
    if res.status == "budget":
        _err(f"budget of {args.budget} nodes exceeded; minimum unknown")
        return EXIT_BUDGET
    if res.min_colors is None:
        print(f"min_colors > {res.max_colors}", file=sys.stderr)
    return EXIT_PASS


def cmd_bench(args) -> int:
    try:
        orders = [int(x) for x in args.n.split(",") if x.strip()]
    except ValueError:
        _err(f"--n expects a comma-separated list of integers, got {args.n!r}")
        return EXIT_INPUT
    rows = []
    for n in orders:
        try:
            mat = build_matrix(n)
        except (UnsupportedOrder, CornerMismatch) as exc:
            _err(str(exc))
            return EXIT_INPUT
        t0 = time.perf_counter()
        verify_fast(mat)
        row = {"n": n, "fast_s": time.perf_counter() - t0, "naive_s": None}
        if n <= NAIVE_BENCH_MAX_N:
            t0 = time.perf_counter()
            verify_naive(mat)
            row["naive_s"] = time.perf_counter() - t0
        rows.append(row)
    print(json.dumps(rows))
    return EXIT_PASS


# ----------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almost-rainbow",
        description="Generate and verify n-color almost-rainbow 4-cycle colorings of K_{n,n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def interp(p):
        p.add_argument(
            "--interpretation",
            default="default",
            help="'default' or exponent/residue/bounds, e.g. ascending/one_based/as_written",
        )

    p = sub.add_parser("generate", help="write the coloring matrix for one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    interp(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check every 4-cycle has at least three colors")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--input", help="matrix file (JSON or CSV); '-' for stdin")
    p.add_argument("--algo", choices=("naive", "fast", "both"), default="fast")
    p.add_argument("--limit", type=int, default=DEFAULT_VIOLATION_LIMIT,
                   help="maximum violations stored in the report")
    interp(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every even order in a range")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--report", default=None, help="JSON-lines output (default: stdout)")
    p.add_argument("--workers", type=int, default=1)
    interp(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="exact minimum colors for a tiny K_{r,c}")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--max-colors", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bench", help="time the naive and fast verifiers")
    p.add_argument("--n", required=True, help="comma-separated orders")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "interpretation"):
        try:
            InterpretationConfig.from_name(args.interpretation)
        except (ValueError, TypeError) as exc:
            _err(str(exc))
            return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
