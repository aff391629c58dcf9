"""Map every 4-cycle of a constructed matrix to the proof region that handles it.

The case analysis splits quadruples ``(i, j; l, m)`` by where the rows and
columns sit: the body, the first row, the last row ``n`` and the first column.
Regions are stored as data, one table per construction family, each row being

    (name, (i_lo, i_hi), (j_lo, j_hi), (l_lo, l_hi), (m_lo, m_hi))

with inclusive bounds written as expressions in ``n`` and the names below;
``i < j`` and ``l < m`` are implicit. Names usable in bounds:

``h``            n/2
``ulo``, ``umid``  last linear piece boundaries of U (Type 3): end of the
                 ``n-2l`` piece and start of the ``n-2(l+1)`` piece
``vmid``, ``vtail`` first column boundaries of V (Type 3): end of the
                 ``2(i-2)-n`` piece and start of the ``2(i-1)-n`` piece

The case analysis leaves two families of quadruples unassigned (last-row
quadruples whose right column is ``m = n`` with ``l <= n-2``); they appear as
``supplement`` regions so the map is total.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import _expr
from .coloring import ColoringMatrix, TypeClass, UnsupportedOrder, classify

Range = tuple[str, str]

I1: Range = ("1", "1")
I2: Range = ("2", "2")
INNER: Range = ("2", "n-1")
JN: Range = ("n", "n")
L1: Range = ("1", "1")
MALL: Range = ("2", "n")
M_N1: Range = ("n-1", "n-1")
MN: Range = ("n", "n")


def _last_row_cases(step: str, rows: Range) -> list[tuple]:
    """Regions for quadruples with ``j = n`` and ``2 <= l < m`` common to every family."""
    out = [
        (f"{step} Case 2a", rows, JN, ("2", "h-1"), ("h", "n-2")),
        (f"{step} Case 2b", rows, JN, ("h", "n-3"), ("h+1", "n-2")),
        (f"{step} Case 5", rows, JN, ("n-1", "n-1"), MN),
    ]
    if step == "Step 2":
        out += [
            ("Step 2 Case 4", rows, JN, ("h", "n-2"), M_N1),
            ("Step 2 supplement m=n", rows, JN, ("2", "n-2"), MN),
        ]
    else:
        out += [
            ("Step 3 Case 4", rows, JN, ("h", "n-2"), ("n-1", "n")),
            ("Step 3 supplement m=n", rows, JN, ("2", "h-1"), MN),
        ]
    return out


COMMON: list[tuple] = [
    ("Step 1 Case 1", ("2", "n-2"), ("3", "n-1"), ("2", "n-1"), ("3", "n")),
    ("Step 1 Case 2", I1, ("2", "n-1"), ("2", "n-1"), ("3", "n")),
    *_last_row_cases("Step 2", I1),
    *_last_row_cases("Step 3", INNER),
    ("Step 4 Case 1", I1, ("2", "2"), L1, MALL),
    ("Step 4 Case 2", I1, ("3", "h+1"), L1, MALL),
    ("Step 4 Case 4 rest.1a", I1, JN, L1, ("h", "n-2")),
    ("Step 4 Case 4 rest.1b", I1, JN, L1, MN),
    ("Step 4 Case 4 rest.2", I1, JN, L1, M_N1),
    ("Step 5 Case 1", I2, ("3", "h+1"), L1, MALL),
    ("Step 5 Case 3 rest.1", I2, JN, L1, ("h", "n-2")),
    ("Step 5 Case 3 rest.2", I2, JN, L1, M_N1),
    ("Step 5 Case 3 rest.3", I2, JN, L1, MN),
    ("Step 6 Case 1", ("3", "h+1"), ("4", "n-1"), L1, MALL),
    ("Step 7 Case 2", ("3", "h+1"), JN, L1, ("h", "n-2")),
    ("Step 7 Case 3", ("3", "h+1"), JN, L1, M_N1),
    ("Step 7 Case 4", ("3", "h+1"), JN, L1, MN),
    ("Step 8 Case 3", ("h+2", "n-1"), JN, L1, M_N1),
    ("Step 8 Case 4", ("h+2", "n-1"), JN, L1, MN),
]

TYPE1_REGIONS: list[tuple] = [
    ("Step 2 Case 1 / G1", I1, JN, ("2", "h-2"), ("3", "h-1")),
    ("Step 2 Case 3 / G1", I1, JN, ("2", "h-1"), M_N1),
    ("Step 3 Case 1 / G1", INNER, JN, ("2", "h-2"), ("3", "h-1")),
    ("Step 3 Case 3 / G1", INNER, JN, ("2", "h-1"), M_N1),
    ("Step 4 Case 3 / G1", I1, ("h+2", "n-1"), L1, MALL),
    ("Step 4 Case 4 / G1", I1, JN, L1, ("2", "h-1")),
    ("Step 5 Case 2 / G1", I2, ("h+2", "n-1"), L1, MALL),
    ("Step 5 Case 3 / G1", I2, JN, L1, ("2", "h-1")),
    ("Step 6 Case 2 / G1", ("h+2", "n-2"), ("h+3", "n-1"), L1, MALL),
    ("Step 7 Case 1 / G1", ("3", "h+1"), JN, L1, ("2", "h-1")),
    ("Step 8 Case 1 / G1", ("h+2", "n-1"), JN, L1, ("2", "h-1")),
    ("Step 8 Case 2 / G1", ("h+2", "n-1"), JN, L1, ("h", "n-2")),
]

TYPE2_REGIONS: list[tuple] = [
    ("Step 2 Case 1 / G2.1", I1, JN, ("2", "h-3"), ("3", "h-2")),
    ("Step 2 Case 1 / G2.2", I1, JN, ("2", "h-2"), ("h-1", "h-1")),
    ("Step 2 Case 3 / G2.1", I1, JN, ("2", "h-2"), M_N1),
    ("Step 2 Case 3 / G2.2", I1, JN, ("h-1", "h-1"), M_N1),
    ("Step 3 Case 1 / G2.1", INNER, JN, ("2", "h-3"), ("3", "h-2")),
    ("Step 3 Case 1 / G2.2", INNER, JN, ("2", "h-2"), ("h-1", "h-1")),
    ("Step 3 Case 3 / G2.1", INNER, JN, ("2", "h-2"), M_N1),
    ("Step 3 Case 3 / G2.2", INNER, JN, ("h-1", "h-1"), M_N1),
    ("Step 4 Case 3 / G2.1", I1, ("h+2", "h+2"), L1, MALL),
    ("Step 4 Case 3 / G2.2", I1, ("h+3", "n-1"), L1, MALL),
    ("Step 4 Case 4 / G2.1", I1, JN, L1, ("2", "h-2")),
    ("Step 4 Case 4 / G2.2", I1, JN, L1, ("h-1", "h-1")),
    ("Step 5 Case 2 / G2.1", I2, ("h+2", "h+2"), L1, MALL),
    ("Step 5 Case 2 / G2.2", I2, ("h+3", "n-1"), L1, MALL),
    ("Step 5 Case 3 / G2.1", I2, JN, L1, ("2", "h-2")),
    ("Step 5 Case 3 / G2.2", I2, JN, L1, ("h-1", "h-1")),
    ("Step 6 Case 2 / G2.1", ("h+2", "h+2"), ("h+3", "n-1"), L1, MALL),
    ("Step 6 Case 2 / G2.2", ("h+3", "n-2"), ("h+4", "n-1"), L1, MALL),
    ("Step 7 Case 1 / G2.1", ("3", "h+1"), JN, L1, ("2", "h-2")),
    ("Step 7 Case 1 / G2.2", ("3", "h+1"), JN, L1, ("h-1", "h-1")),
    ("Step 8 Case 1 / G2.1", ("h+2", "h+2"), JN, L1, ("2", "h-2")),
    ("Step 8 Case 1 / G2.2", ("h+3", "n-1"), JN, L1, ("2", "h-2")),
    ("Step 8 Case 1 / G2.3", ("h+3", "n-1"), JN, L1, ("h-1", "h-1")),
    ("Step 8 Case 1 / G2.4", ("h+2", "h+2"), JN, L1, ("h-1", "h-1")),
    ("Step 8 Case 2 / G2.1", ("h+2", "h+2"), JN, L1, ("h", "n-2")),
    ("Step 8 Case 2 / G2.2", ("h+3", "n-1"), JN, L1, ("h", "n-2")),
]


def _type3_pairs(step: str, rows: Range) -> list[tuple]:
    return [
        (f"{step} Case 1 / G3.1a", rows, JN, ("2", "ulo-1"), ("3", "ulo")),
        (f"{step} Case 1 / G3.1b", rows, JN, ("umid", "h-3"), ("umid+1", "h-2")),
        (f"{step} Case 1 / G3.2", rows, JN, ("2", "ulo"), ("umid", "h-2")),
        (f"{step} Case 1 / G3.3", rows, JN, ("2", "ulo"), ("h-1", "h-1")),
        (f"{step} Case 1 / G3.4", rows, JN, ("umid", "h-2"), ("h-1", "h-1")),
        (f"{step} Case 3 / G3.1", rows, JN, ("2", "ulo"), M_N1),
        (f"{step} Case 3 / G3.2", rows, JN, ("umid", "h-2"), M_N1),
        (f"{step} Case 3 / G3.3", rows, JN, ("h-1", "h-1"), M_N1),
    ]


_V3 = {"1": ("h+2", "h+2"), "2": ("h+3", "vmid"), "3": ("vtail", "n-1")}
_M3 = (("2", "ulo"), ("umid", "h-2"), ("h-1", "h-1"))

TYPE3_REGIONS: list[tuple] = [
    *_type3_pairs("Step 2", I1),
    *_type3_pairs("Step 3", INNER),
    *[(f"Step 4 Case 3 / G3.{k}", I1, rng, L1, MALL) for k, rng in _V3.items()],
    ("Step 4 Case 4 / G3.low", I1, JN, L1, _M3[0]),
    ("Step 4 Case 4 / G3.1", I1, JN, L1, _M3[1]),
    ("Step 4 Case 4 / G3.2", I1, JN, L1, _M3[2]),
    *[(f"Step 5 Case 2 / G3.{k}", I2, rng, L1, MALL) for k, rng in _V3.items()],
    ("Step 5 Case 3 / G3.low", I2, JN, L1, _M3[0]),
    ("Step 5 Case 3 / G3.1", I2, JN, L1, _M3[1]),
    ("Step 5 Case 3 / G3.2", I2, JN, L1, _M3[2]),
    ("Step 6 Case 2 / G3.1", ("h+2", "h+2"), ("h+3", "vmid"), L1, MALL),
    ("Step 6 Case 2 / G3.2", ("h+2", "h+2"), ("vtail", "n-1"), L1, MALL),
    ("Step 6 Case 2 / G3.3", ("h+3", "vmid-1"), ("h+4", "vmid"), L1, MALL),
    ("Step 6 Case 2 / G3.4", ("vtail", "n-2"), ("vtail+1", "n-1"), L1, MALL),
    ("Step 6 Case 2 / G3.5", ("h+3", "vmid"), ("vtail", "n-1"), L1, MALL),
    ("Step 7 Case 1 / G3.low", ("3", "h+1"), JN, L1, _M3[0]),
    ("Step 7 Case 1 / G3.1", ("3", "h+1"), JN, L1, _M3[1]),
    ("Step 7 Case 1 / G3.2", ("3", "h+1"), JN, L1, _M3[2]),
    *[
        (f"Step 8 Case 1 / G3.{3 * a + b + 1}", _V3[str(b + 1)], JN, L1, _M3[a])
        for a in range(3)
        for b in range(3)
    ],
    *[(f"Step 8 Case 2 / G3.{k}", rng, JN, L1, ("h", "n-2")) for k, rng in _V3.items()],
]

REGION_TABLES = {"Type1": TYPE1_REGIONS, "Type2": TYPE2_REGIONS, "Type3": TYPE3_REGIONS}

# Type 3 boundary names per variant; only n = 22 moves the split points.
TYPE3_BOUNDS = {
    "Regular": {"ulo": "(n-4)/6", "umid": "(n+2)/6", "vmid": "(5*n+4)/6", "vtail": "(5*n+10)/6"},
    "ExceptionN22": {
        "ulo": "(n-10)/6",
        "umid": "(n-4)/6",
        "vmid": "(5*n-2)/6",
        "vtail": "(5*n+4)/6",
    },
}


class RegionGap(ValueError):
    """A quadruple falls in no region."""


class RegionOverlap(ValueError):
    """A quadruple falls in more than one region."""


@dataclass(frozen=True)
class RegionStats:
    name: str
    quadruples: int
    violations: int


def _env(n: int, cls: TypeClass) -> dict[str, int]:
    env = {"n": n, "h": n // 2}
    if cls.tag == "Type3":
        bounds = TYPE3_BOUNDS["ExceptionN22" if cls.variant == "ExceptionN22" else "Regular"]
        env.update({k: _expr.evaluate(v, n=n) for k, v in bounds.items()})
    return env


def region_table(n: int, cls: TypeClass | None = None) -> list[tuple[str, tuple[int, int], ...]]:
    """Resolve the region table for order ``n`` to integer ranges."""
    cls = classify(n) if cls is None else cls
    if not cls.supported:
        raise UnsupportedOrder(cls.reason)
    env = _env(n, cls)
    out = []
    for name, *ranges in COMMON + REGION_TABLES[cls.tag]:
        out.append(
            (name, *[(_expr.evaluate(lo, **env), _expr.evaluate(hi, **env)) for lo, hi in ranges])
        )
    return out


def _violation_mask(g: np.ndarray) -> np.ndarray:
    """Boolean ``mask[i, j, l, m]``: the four cells carry at most two colors.

    Four values have at most two distinct ones exactly when at least two of
    their six pairwise comparisons are equalities.
    """
    il = g[:, None, :, None]
    im = g[:, None, None, :]
    jl = g[None, :, :, None]
    jm = g[None, :, None, :]
    eq = (
        (il == im).astype(np.uint8)
        + (jl == jm)
        + (il == jl)
        + (im == jm)
        + (il == jm)
        + (im == jl)
    )
    return eq >= 2


def partition_coverage(
    mat: ColoringMatrix, cls: TypeClass | None = None
) -> dict[str, RegionStats]:
    """Quadruple and violation counts for every proof region, in table order.

    Raises :class:`RegionGap` if some quadruple ``i < j``, ``l < m`` lies in no
    region and :class:`RegionOverlap` if it lies in two. Memory is O(n^4), so
    this is meant for orders up to a few dozen.
    """
    n = mat.n
    cls = classify(n) if cls is None else cls
    table = region_table(n, cls)
    owner = np.full((n, n, n, n), -1, dtype=np.int16)
    idx = np.arange(1, n + 1)
    i_, j_, l_, m_ = np.ix_(idx, idx, idx, idx)
    valid = (i_ < j_) & (l_ < m_)

    for k, (name, ri, rj, rl, rm) in enumerate(table):
        sl = tuple(slice(lo - 1, hi) for lo, hi in (ri, rj, rl, rm))
        if any(s.start >= s.stop for s in sl):
            continue
        block = valid[sl]
        taken = owner[sl]
        clash = block & (taken >= 0)
        if clash.any():
            pos = np.argwhere(clash)[0]
            quad = tuple(int(p + s.start + 1) for p, s in zip(pos, sl))
            other = table[int(taken[tuple(pos)])][0]
            raise RegionOverlap(f"quadruple {quad} is in both {other!r} and {name!r}")
        taken[block] = k

    gap = valid & (owner < 0)
    if gap.any():
        quad = tuple(int(x) + 1 for x in np.argwhere(gap)[0])
        raise RegionGap(f"quadruple (i,j,l,m)={quad} is in no region for n={n}")

    bad = _violation_mask(mat.entries) & valid
    counts = np.bincount(owner[valid].astype(np.int64), minlength=len(table))
    viol = np.bincount(owner[bad].astype(np.int64), minlength=len(table))
    assert counts.sum() == comb(n, 2) ** 2
    return {
        name: RegionStats(name, int(counts[k]), int(viol[k]))
        for k, (name, *_) in enumerate(table)
    }
