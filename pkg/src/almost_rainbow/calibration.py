"""Pick the interpretation of the construction under which most orders verify."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import (
    DEFAULT_CONFIG,
    BranchTableError,
    CornerMismatch,
    InterpretationConfig,
    UnsupportedOrder,
    build_matrix,
    classify,
    variant_grid,
)
from .verifier import Violation, verify_fast


@dataclass(frozen=True)
class OrderStatus:
    """Result of building and verifying one order under one interpretation.

    ``status`` is one of ``pass``, ``fail``, ``corner-mismatch``,
    ``invalid-colors``, ``branch-error`` or ``unsupported``.
    """

    n: int
    config: str
    status: str
    colors_used: int = 0
    violations: int = 0
    first_violation: Violation | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def evaluate_order(n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> OrderStatus:
    """Build order ``n`` under ``cfg`` and verify it; failures are reported, never raised."""
    try:
        mat = build_matrix(n, cfg)
    except UnsupportedOrder as exc:
        return OrderStatus(n, cfg.name, "unsupported", detail=str(exc))
    except CornerMismatch as exc:
        return OrderStatus(n, cfg.name, "corner-mismatch", detail=str(exc))
    except BranchTableError as exc:
        return OrderStatus(n, cfg.name, "branch-error", detail=str(exc))
    except ValueError as exc:
        # a formula produced a color outside 1..n
        return OrderStatus(n, cfg.name, "invalid-colors", detail=str(exc))
    rep = verify_fast(mat, limit=1)
    ok = rep.passed and rep.colors_used <= n
    return OrderStatus(
        n,
        cfg.name,
        "pass" if ok else "fail",
        colors_used=rep.colors_used,
        violations=rep.violation_count,
        first_violation=rep.violations[0] if rep.violations else None,
    )


def _evaluate_pair(args):
    n, name = args
    return evaluate_order(n, InterpretationConfig.from_name(name))


@dataclass
class Calibration:
    config: InterpretationConfig
    statuses: dict[int, OrderStatus]
    table: dict[str, dict[int, OrderStatus]] = field(repr=False)

    def passing(self, name: str | None = None) -> int:
        rows = self.table[name or self.config.name]
        return sum(s.passed for s in rows.values())


def calibrate_interpretation(
    n_list: Sequence[int],
    variants: Iterable[InterpretationConfig] | None = None,
    workers: int = 1,
) -> Calibration:
    """Evaluate every variant on every order and keep the one with most passes.

    Ties go to the earlier variant, and the default interpretation comes first
    in the grid, so it wins unless another reading strictly helps.
    """
    n_list = list(n_list)
    if not n_list:
        raise ValueError("n_list must be non-empty")
    for n in n_list:
        if not classify(n).supported:
            raise UnsupportedOrder(classify(n).reason)
    variants = list(variants) if variants is not None else variant_grid()
    jobs = [(n, cfg.name) for cfg in variants for n in n_list]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_pair, jobs))
    else:
        results = [_evaluate_pair(job) for job in jobs]

    table: dict[str, dict[int, OrderStatus]] = {cfg.name: {} for cfg in variants}
    for st in results:
        table[st.config][st.n] = st
    best = max(variants, key=lambda cfg: (sum(s.passed for s in table[cfg.name].values()),
                                          -variants.index(cfg)))
    return Calibration(best, dict(table[best.name]), table)


@dataclass(frozen=True)
class Finding:
    """Definitive outcome for one order across the variant grid."""

    n: int
    verdict: str
    passing_variants: tuple[str, ...]
    counterexample: Violation | None
    summary: str


def exceptional_finding(
    n: int, cfg: InterpretationConfig = DEFAULT_CONFIG, variants=None
) -> Finding:
    """Verdict for one order: ``pass``, ``pass-under-variant`` or ``fails-all-variants``.

    For a failure the counterexample is the lexicographically first violating
    quadruple under ``cfg``.
    """
    variants = list(variants) if variants is not None else variant_grid()
    own = evaluate_order(n, cfg)
    if own.passed:
        return Finding(n, "pass", (cfg.name,), None, f"n={n}: pass (zero violations) under {cfg.name}")
    passing = tuple(v.name for v in variants if evaluate_order(n, v).passed)
    if passing:
        return Finding(
            n,
            "pass-under-variant",
            passing,
            own.first_violation,
            f"n={n}: fails under {cfg.name} ({own.status}); passes under {', '.join(passing)}",
        )
    v = own.first_violation
    where = (
        f"minimal counterexample (i,j,l,m)=({v.i},{v.j},{v.l},{v.m}) colors={list(v.colors)}"
        if v is not None
        else own.detail
    )
    return Finding(
        n,
        "fails-all-variants",
        (),
        v,
        f"n={n}: fails under all {len(variants)} interpretation variants; "
        f"{own.violations} violations under {cfg.name}; {where}",
    )
