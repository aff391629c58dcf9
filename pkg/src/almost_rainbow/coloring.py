"""Explicit n-color edge coloring of K_{n,n} with no 4-cycle on two colors.

The coloring is an n x n matrix ``G``: row ``i`` is a left vertex, column
``l`` a right vertex, entry ``G[i, l]`` the color of edge ``il``. It is made of

* a body (rows ``1..n-1``, columns ``2..n``) whose first row is ``2..n`` and
  whose other rows are shifts of the cycle ``(1 2 ... n-1)``,
* a first column ``V`` and a last row ``U`` given piecewise, with one family of
  formulas per residue of ``n`` mod 6 and a handful of special orders.

Every index in the public API is 1-based, matching the matrix display.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

import numpy as np

from . import _expr
from .branches import DEFAULT_TABLES, TYPE3_SPECIAL, Branch, BranchTable

__all__ = [
    "ColoringMatrix",
    "CornerMismatch",
    "InterpretationConfig",
    "MatrixParseError",
    "TypeClass",
    "UnsupportedOrder",
    "BranchTableError",
    "DEFAULT_CONFIG",
    "body_entry",
    "build_matrix",
    "classify",
    "first_column",
    "last_row",
    "residue",
    "resolve_branches",
    "sigma_power",
]


class UnsupportedOrder(ValueError):
    """No construction exists for the requested order."""


class CornerMismatch(ValueError):
    """V and U disagree on their shared cell (n, 1)."""


class BranchTableError(ValueError):
    """Resolved branch bounds do not partition 1..n."""


class MatrixParseError(ValueError):
    """A serialized matrix could not be decoded; ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


# --------------------------------------------------------------------------- types


@dataclass(frozen=True)
class TypeClass:
    """Which construction family governs an order ``n``."""

    tag: Literal["Type1", "Type2", "Type3", "Unsupported"]
    k: int = 0
    variant: Literal[
        "Regular", "ExceptionN6", "ExceptionN10", "ExceptionN16", "ExceptionN22"
    ] = "Regular"
    y_value: int | None = None
    x_value: int | None = None
    reason: str = ""

    @property
    def supported(self) -> bool:
        return self.tag != "Unsupported"

    @property
    def exceptional(self) -> bool:
        return self.variant != "Regular"

    @property
    def table_key(self) -> str:
        if self.tag == "Type1":
            return "type1"
        if self.tag == "Type2":
            return "type2_n6" if self.variant == "ExceptionN6" else "type2"
        if self.tag == "Type3":
            return "type3_n22" if self.variant == "ExceptionN22" else "type3"
        raise UnsupportedOrder(self.reason)


ExponentRule = Literal["descending", "ascending"]
ResidueRule = Literal["one_based", "shifted"]
BoundShift = Literal["as_written", "shift_down", "shift_up"]

EXPONENT_RULES: tuple[str, ...] = ("descending", "ascending")
RESIDUE_RULES: tuple[str, ...] = ("one_based", "shifted")
BOUND_SHIFTS: tuple[str, ...] = ("as_written", "shift_down", "shift_up")


@dataclass(frozen=True)
class InterpretationConfig:
    """Indexing conventions the written construction leaves open.

    exponent_rule
        ``descending``: row ``i`` uses the shift ``s = n + 1 - i`` (row 2 is the
        identity, row 3 the shift by ``n - 2``, ..., row ``n - 1`` the shift by 2).
        ``ascending``: ``s = i - 2``.
    residue_rule
        ``one_based``: ``x -> ((x - 1) mod (n - 1)) + 1``.
        ``shifted``: ``x -> (x mod (n - 1)) + 1``.
    bound_shift
        ``as_written`` keeps every inclusive bound. ``shift_down`` reads the upper
        bound of each multi-index branch as exclusive, ``shift_up`` reads the
        lower bound of each multi-index branch as exclusive.
    tables
        Branch tables for V and U keyed by ``TypeClass.table_key``.
    """

    exponent_rule: ExponentRule = "descending"
    residue_rule: ResidueRule = "one_based"
    bound_shift: BoundShift = "as_written"
    tables: Mapping[str, BranchTable] = field(
        default=DEFAULT_TABLES, repr=False, hash=False, compare=False
    )

    def __post_init__(self):
        if self.exponent_rule not in EXPONENT_RULES:
            raise ValueError(f"unknown exponent_rule {self.exponent_rule!r}")
        if self.residue_rule not in RESIDUE_RULES:
            raise ValueError(f"unknown residue_rule {self.residue_rule!r}")
        if self.bound_shift not in BOUND_SHIFTS:
            raise ValueError(f"unknown bound_shift {self.bound_shift!r}")

    @property
    def name(self) -> str:
        if (self.exponent_rule, self.residue_rule, self.bound_shift) == (
            "descending", "one_based", "as_written"
        ):
            return "default"
        return f"{self.exponent_rule}/{self.residue_rule}/{self.bound_shift}"

    @classmethod
    def from_name(cls, name: str) -> "InterpretationConfig":
        """Inverse of :attr:`name`."""
        if name == "default":
            return cls()
        parts = name.split("/")
        if len(parts) != 3:
            raise ValueError(
                f"interpretation name must be 'default' or 'exponent/residue/bounds', got {name!r}"
            )
        return cls(*parts)

    def exponent(self, i, n: int):
        if self.exponent_rule == "descending":
            return (n + 1) - i
        return i - 2

    def residue(self, x, n: int):
        if self.residue_rule == "one_based":
            return (x - 1) % (n - 1) + 1
        return x % (n - 1) + 1


DEFAULT_CONFIG = InterpretationConfig()


def variant_grid() -> list[InterpretationConfig]:
    """All interpretation variants, default first."""
    return [
        InterpretationConfig(e, r, b)
        for e in EXPONENT_RULES
        for r in RESIDUE_RULES
        for b in BOUND_SHIFTS
    ]


# --------------------------------------------------------------------------- matrix


@dataclass(frozen=True, eq=False)
class ColoringMatrix:
    """Immutable square grid of colors in ``1..n``.

    ``entries`` is stored 0-based as a read-only ``int64`` array; use :meth:`at`
    for 1-based access.
    """

    entries: np.ndarray
    type_tag: str = "custom"

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"coloring matrix must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise ValueError("coloring matrix must be non-empty")
        bad = np.argwhere((arr < 1) | (arr > n))
        if len(bad):
            r, c = bad[0]
            raise ValueError(
                f"entry ({r + 1},{c + 1}) = {arr[r, c]} outside the color range 1..{n}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def at(self, i: int, l: int) -> int:
        return int(self.entries[i - 1, l - 1])

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()

    def colors_used(self) -> int:
        return int(np.unique(self.entries).size)

    def __eq__(self, other):
        if not isinstance(other, ColoringMatrix):
            return NotImplemented
        return self.type_tag == other.type_tag and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.type_tag, self.entries.tobytes(), self.n))

    # serialization -------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "type": self.type_tag, "entries": self.rows()})

    def to_csv(self) -> str:
        return "".join(",".join(str(v) for v in row) + "\n" for row in self.rows())

    @classmethod
    def from_json(cls, text: str) -> "ColoringMatrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(obj, dict) or "entries" not in obj:
            raise MatrixParseError("expected an object with an 'entries' field")
        grid = obj["entries"]
        _check_grid(grid)
        if "n" in obj and obj["n"] != len(grid):
            raise MatrixParseError(f"'n' is {obj['n']} but entries has {len(grid)} rows")
        try:
            return cls(np.array(grid), type_tag=str(obj.get("type", "custom")))
        except ValueError as exc:
            raise MatrixParseError(str(exc)) from None

    @classmethod
    def from_csv(cls, text: str, type_tag: str = "custom") -> "ColoringMatrix":
        grid: list[list[int]] = []
        for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
            if not row:
                continue
            parsed = []
            for col, cell in enumerate(row, start=1):
                try:
                    parsed.append(int(cell.strip()))
                except ValueError:
                    raise MatrixParseError(f"not an integer: {cell!r}", lineno, col) from None
            grid.append(parsed)
        _check_grid(grid)
        try:
            return cls(np.array(grid), type_tag=type_tag)
        except ValueError as exc:
            raise MatrixParseError(str(exc)) from None


def _check_grid(grid) -> None:
    if not isinstance(grid, list) or not grid:
        raise MatrixParseError("matrix has no rows")
    n = len(grid)
    for r, row in enumerate(grid, start=1):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise MatrixParseError(f"row has {got} entries, expected {n}", r)
        for c, v in enumerate(row, start=1):
            if isinstance(v, bool) or not isinstance(v, int):
                raise MatrixParseError(f"not an integer: {v!r}", r, c)
            if v < 1:
                raise MatrixParseError(f"color {v} is below 1", r, c)


# --------------------------------------------------------------------------- formulas


def classify(n: int) -> TypeClass:
    """Return the construction family for order ``n``; never raises for ``n >= 1``."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n % 2:
        return TypeClass("Unsupported", reason=f"n={n} is odd; only even orders are constructed")
    if n < 6:
        return TypeClass("Unsupported", reason=f"n={n} < 6 has no construction")
    r = n % 6
    if r == 2:
        return TypeClass("Type1", k=(n - 2) // 6)
    if r == 0:
        k = (n - 6) // 6
        y = n // 2 - 2 if k % 2 == 0 else n // 2 + 1
        variant = "ExceptionN6" if n == 6 else "Regular"
        return TypeClass("Type2", k=k, variant=variant, y_value=y)
    k = (n - 4) // 6
    variant = {10: "ExceptionN10", 16: "ExceptionN16", 22: "ExceptionN22"}.get(n, "Regular")
    return TypeClass(
        "Type3", k=k, variant=variant, x_value=_expr.evaluate(TYPE3_SPECIAL[variant], n=n)
    )


def residue(x: int, n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> int:
    """Representative of ``x`` modulo ``n - 1`` in ``{1, ..., n-1}``."""
    return int(cfg.residue(x, n))


def sigma_power(r: int, c: int, n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> int:
    """Apply the ``r``-th power of the cycle ``(1 2 ... n-1)`` to ``c``."""
    if n < 3:
        raise ValueError(f"sigma needs n >= 3, got {n}")
    return residue(r + c, n, cfg)


def body_entry(i: int, l: int, n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> int:
    """Color of body cell ``(i, l)`` with ``1 <= i <= n-1`` and ``2 <= l <= n``."""
    if not (1 <= i <= n - 1 and 2 <= l <= n):
        raise ValueError(f"({i},{l}) is outside the body of an order-{n} matrix")
    if i == 1:
        return l
    return sigma_power(cfg.exponent(i, n), l - 1, n, cfg)


def _shift_cuts(ranges: list[tuple[int, int]], mode: str) -> list[tuple[int, int]]:
    if mode == "as_written" or len(ranges) < 2:
        return list(ranges)
    cuts = [hi for _, hi in ranges[:-1]]
    sizes = [hi - lo + 1 for lo, hi in ranges]
    for k in range(len(cuts)):
        if mode == "shift_down" and sizes[k] >= 2:
            cuts[k] -= 1
        elif mode == "shift_up" and sizes[k + 1] >= 2:
            cuts[k] += 1
    lows = [ranges[0][0]] + [c + 1 for c in cuts]
    highs = cuts + [ranges[-1][1]]
    return list(zip(lows, highs))


def resolve_branches(
    n: int,
    cls: TypeClass,
    cfg: InterpretationConfig,
    which: Literal["first_column", "last_row"],
) -> list[tuple[int, int, Branch]]:
    """Evaluate the branch bounds of V or U for order ``n``.

    Returns ``(lo, hi, branch)`` triples after applying ``cfg.bound_shift``.
    Raises :class:`BranchTableError` unless the ranges partition ``1..n`` in order.
    """
    if not cls.supported:
        raise UnsupportedOrder(cls.reason)
    table = getattr(cfg.tables[cls.table_key], which)
    try:
        ranges = [(_expr.evaluate(b.lo, n=n), _expr.evaluate(b.hi, n=n)) for b in table]
    except _expr.NonIntegralBound as exc:
        raise BranchTableError(f"{which} bounds for n={n}: {exc}") from None
    ranges = _shift_cuts(ranges, cfg.bound_shift)
    expected = 1
    for lo, hi in ranges:
        if lo != expected or hi < lo - 1:
            raise BranchTableError(
                f"{which} branches for n={n} do not partition 1..{n}: {ranges}"
            )
        expected = hi + 1
    if expected != n + 1:
        raise BranchTableError(f"{which} branches for n={n} stop at {expected - 1}: {ranges}")
    return [(lo, hi, b) for (lo, hi), b in zip(ranges, table)]


def _evaluate_piecewise(n, cls, cfg, which, index_name) -> list[int]:
    env = {"n": n}
    if cls.y_value is not None:
        env["Y"] = cls.y_value
    if cls.x_value is not None:
        env["X"] = cls.x_value
    out = []
    for lo, hi, branch in resolve_branches(n, cls, cfg, which):
        for idx in range(lo, hi + 1):
            out.append(_expr.evaluate(branch.value, **env, **{index_name: idx}))
    return out


def first_column(
    n: int, cls: TypeClass | None = None, cfg: InterpretationConfig = DEFAULT_CONFIG
) -> list[int]:
    """Colors ``(a_{1,1}, ..., a_{n,1})`` of the first column V."""
    cls = classify(n) if cls is None else cls
    return _evaluate_piecewise(n, cls, cfg, "first_column", "i")


def last_row(
    n: int, cls: TypeClass | None = None, cfg: InterpretationConfig = DEFAULT_CONFIG
) -> list[int]:
    """Colors ``(a_{n,1}, ..., a_{n,n})`` of the last row U."""
    cls = classify(n) if cls is None else cls
    return _evaluate_piecewise(n, cls, cfg, "last_row", "l")


def _body(n: int, cfg: InterpretationConfig) -> np.ndarray:
    rows = np.arange(2, n)[:, None]
    cols = np.arange(2, n + 1)[None, :]
    body = np.empty((n - 1, n - 1), dtype=np.int64)
    body[0] = np.arange(2, n + 1)
    body[1:] = cfg.residue(cfg.exponent(rows, n) + (cols - 1), n)
    return body


def build_matrix(n: int, cfg: InterpretationConfig = DEFAULT_CONFIG) -> ColoringMatrix:
    """Assemble the full coloring matrix for order ``n``.

    Raises :class:`UnsupportedOrder` when ``classify(n)`` is unsupported and
    :class:`CornerMismatch` when V and U disagree at ``(n, 1)``.
    """
    cls = classify(n)
    if not cls.supported:
        raise UnsupportedOrder(cls.reason)
    v = first_column(n, cls, cfg)
    u = last_row(n, cls, cfg)
    if v[-1] != u[0]:
        raise CornerMismatch(f"n={n}: first column ends with {v[-1]}, last row starts with {u[0]}")
    grid = np.empty((n, n), dtype=np.int64)
    grid[: n - 1, 1:] = _body(n, cfg)
    grid[:, 0] = v
    grid[n - 1, :] = u
    return ColoringMatrix(grid, type_tag=cls.tag)


def covered_orders(lo: int, hi: int) -> Iterable[int]:
    """Orders in ``[lo, hi]`` that have a construction."""
    return (n for n in range(max(lo, 1), hi + 1) if classify(n).supported)


def as_grid(mat: ColoringMatrix | Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    """2-D ``int64`` view of a matrix or nested sequence; rectangles allowed."""
    if isinstance(mat, ColoringMatrix):
        return mat.entries
    arr = np.asarray(mat, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D grid, got shape {arr.shape}")
    return arr
