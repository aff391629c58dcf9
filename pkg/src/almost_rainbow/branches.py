"""Piecewise definitions of the first column V and last row U, as data.

Each table is a sequence of ``(lo, hi, value)`` strings. ``lo`` and ``hi`` are
inclusive bounds on the row index ``i`` (for V) or column index ``l`` (for U);
``value`` is the color. Names available to the expressions: ``n``, the index
(``i`` or ``l``), ``Y`` (Type 2 special color) and ``X`` (Type 3 special color,
``n-9`` unless an exceptional order substitutes another value).
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping, NamedTuple


class Branch(NamedTuple):
    lo: str
    hi: str
    value: str


class BranchTable(NamedTuple):
    first_column: tuple[Branch, ...]
    last_row: tuple[Branch, ...]


def _table(v, u) -> BranchTable:
    return BranchTable(tuple(Branch(*b) for b in v), tuple(Branch(*b) for b in u))


TYPE1 = _table(
    v=[
        ("1", "1", "1"),
        ("2", "2", "3"),
        ("3", "n/2+1", "n"),
        ("n/2+2", "n-1", "2*(i-1)-n"),
        ("n", "n", "n-2"),
    ],
    u=[
        ("1", "n/2-1", "n-2*l"),
        ("n/2", "n-2", "n"),
        ("n-1", "n-1", "n-1"),
        ("n", "n", "1"),
    ],
)

TYPE2 = _table(
    v=[
        ("1", "1", "1"),
        ("2", "2", "3"),
        ("3", "n/2+1", "n"),
        ("n/2+2", "n/2+2", "Y"),
        ("n/2+3", "n-1", "2*(i-2)-n"),
        ("n", "n", "n-2"),
    ],
    u=[
        ("1", "1", "n-2"),
        ("2", "n/2-2", "n-2*(l+1)"),
        ("n/2-1", "n/2-1", "Y"),
        ("n/2", "n-2", "n"),
        ("n-1", "n-1", "n-1"),
        ("n", "n", "1"),
    ],
)

# n = 6: five listed V entries plus the shared corner, which is U's first entry.
TYPE2_N6 = _table(
    v=[(str(i), str(i), str(c)) for i, c in enumerate((1, 5, 6, 6, 4, 3), start=1)],
    u=[(str(l), str(l), str(c)) for l, c in enumerate((3, 6, 6, 6, 5, 1), start=1)],
)

TYPE3 = _table(
    v=[
        ("1", "1", "1"),
        ("2", "2", "3"),
        ("3", "n/2+1", "n"),
        ("n/2+2", "n/2+2", "X"),
        ("n/2+3", "(5*n+4)/6", "2*(i-2)-n"),
        ("(5*n+10)/6", "n-1", "2*(i-1)-n"),
        ("n", "n", "n-2"),
    ],
    u=[
        ("1", "(n-4)/6", "n-2*l"),
        ("(n+2)/6", "n/2-2", "n-2*(l+1)"),
        ("n/2-1", "n/2-1", "X"),
        ("n/2", "n-2", "n"),
        ("n-1", "n-1", "n-1"),
        ("n", "n", "1"),
    ],
)

# n = 22 overrides the split points of the two linear pieces in V and in U.
TYPE3_N22 = _table(
    v=[
        ("1", "1", "1"),
        ("2", "2", "3"),
        ("3", "n/2+1", "n"),
        ("n/2+2", "n/2+2", "X"),
        ("n/2+3", "(5*n-2)/6", "2*(i-2)-n"),
        ("(5*n+4)/6", "n-1", "2*(i-1)-n"),
        ("n", "n", "n-2"),
    ],
    u=[
        ("1", "(n-10)/6", "n-2*l"),
        ("(n-4)/6", "n/2-2", "n-2*(l+1)"),
        ("n/2-1", "n/2-1", "X"),
        ("n/2", "n-2", "n"),
        ("n-1", "n-1", "n-1"),
        ("n", "n", "1"),
    ],
)

DEFAULT_TABLES: Mapping[str, BranchTable] = MappingProxyType(
    {
        "type1": TYPE1,
        "type2": TYPE2,
        "type2_n6": TYPE2_N6,
        "type3": TYPE3,
        "type3_n22": TYPE3_N22,
    }
)

# Type 3 special color X per variant; the regular value is n-9.
TYPE3_SPECIAL = MappingProxyType(
    {"Regular": "n-9", "ExceptionN10": "n-8", "ExceptionN16": "n-11", "ExceptionN22": "n-5"}
)
