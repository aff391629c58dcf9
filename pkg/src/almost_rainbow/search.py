"""Exact minimum number of colors for tiny complete bipartite graphs.

Here ``f(K_{r,c}, C4, q)`` is read as the least number of colors in an edge
coloring of ``K_{r,c}`` where every 4-cycle gets at least ``q`` distinct
colors. The oracle decides it by backtracking over the ``r * c`` cells in
row-major order. A cell completes exactly the quadruples in which it is the
bottom-right corner, so each quadruple is checked once, as soon as all four
cells are known. Colors are introduced in canonical order (color ``k`` may
appear only after colors ``0..k-1``), which removes the symmetry of relabeling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .calibration import evaluate_order
from .coloring import DEFAULT_CONFIG, InterpretationConfig, classify

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search space was exhausted."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SearchResult:
    rows: int
    cols: int
    q: int
    max_colors: int
    min_colors: int | None
    witness: list[list[int]] | None
    nodes_explored: int
    status: str  # "exact" or "budget"

    @property
    def infeasible(self) -> bool:
        """True when the search proved no coloring with at most ``max_colors`` colors exists."""
        return self.status == "exact" and self.min_colors is None

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "q": self.q,
            "max_colors": self.max_colors,
            "min_colors": self.min_colors,
            "witness": self.witness,
            "nodes": self.nodes_explored,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _completions(rows: int, cols: int) -> list[list[tuple[int, int, int]]]:
    """For each cell, the other three cells of every quadruple it completes."""
    out = []
    for r in range(rows):
        for c in range(cols):
            out.append(
                [(i * cols + l, i * cols + c, r * cols + l) for i in range(r) for l in range(c)]
            )
    return out


def find_coloring(
    rows: int,
    cols: int,
    colors: int,
    q: int = 3,
    budget: int = DEFAULT_BUDGET,
    symmetry_breaking: bool = True,
) -> tuple[list[list[int]] | None, int]:
    """Lexicographically smallest valid coloring with at most ``colors`` colors.

    Colors in the returned grid are ``1..colors``. Returns ``(grid or None,
    nodes)``; raises :class:`BudgetExceeded` past ``budget`` nodes.
    """
    total = rows * cols
    checks = _completions(rows, cols)
    cell = [0] * total
    nodes = 0

    def dfs(p: int, used: int) -> bool:
        nonlocal nodes
        if p == total:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes)
        top = min(used + 1, colors) if symmetry_breaking else colors
        for color in range(top):
            for a, b, d in checks[p]:
                if len({color, cell[a], cell[b], cell[d]}) < q:
                    break
            else:
                cell[p] = color
                if dfs(p + 1, max(used, color + 1)):
                    return True
        return False

    if dfs(0, 0):
        grid = [[cell[r * cols + c] + 1 for c in range(cols)] for r in range(rows)]
        return grid, nodes
    return None, nodes


def min_colors_exhaustive(
    rows: int,
    cols: int,
    q: int = 3,
    max_colors: int | None = None,
    budget: int = DEFAULT_BUDGET,
    symmetry_breaking: bool = True,
) -> SearchResult:
    """Smallest ``c`` in ``q..max_colors`` admitting a valid coloring, with its witness.

    ``budget`` bounds the nodes of all probes together. When it runs out the
    result has ``status="budget"`` and ``min_colors=None``; when every ``c`` up
    to ``max_colors`` is refuted, ``status="exact"`` and ``min_colors=None``.
    """
    if rows < 2 or cols < 2:
        raise ValueError("both parts need at least 2 vertices")
    if q not in (3, 4):
        raise ValueError(f"q must be 3 or 4, got {q}")
    max_colors = rows * cols if max_colors is None else max_colors
    if max_colors > rows * cols:
        raise ValueError("max_colors cannot exceed the number of edges")
    spent = 0
    for c in range(q, max_colors + 1):
        try:
            grid, nodes = find_coloring(rows, cols, c, q, budget - spent, symmetry_breaking)
        except BudgetExceeded as exc:
            return SearchResult(rows, cols, q, max_colors, None, None, spent + exc.nodes, "budget")
        spent += nodes
        if grid is not None:
            return SearchResult(rows, cols, q, max_colors, c, grid, spent, "exact")
    return SearchResult(rows, cols, q, max_colors, None, None, spent, "exact")


@dataclass(frozen=True)
class WitnessReport:
    n: int
    status: str
    passed: bool
    colors_used: int
    violations: int
    detail: str = ""


def verify_bound_witness(n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> WitnessReport:
    """Build the order-``n`` coloring and check it certifies ``f(K_{n,n}, C4, 3) <= n``."""
    cls = classify(n)
    if not cls.supported:
        return WitnessReport(n, "unsupported", False, 0, 0, cls.reason)
    st = evaluate_order(n, cfg)
    return WitnessReport(n, st.status, st.passed, st.colors_used, st.violations, st.detail)


def witness_array(result: SearchResult) -> np.ndarray:
    if result.witness is None:
        raise ValueError("search produced no witness")
    return np.array(result.witness, dtype=np.int64)
