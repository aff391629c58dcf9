import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from almost_rainbow.calibration import calibrate_interpretation
from almost_rainbow.coloring import (
    DEFAULT_CONFIG,
    BranchTableError,
    ColoringMatrix,
    CornerMismatch,
    InterpretationConfig,
    MatrixParseError,
    UnsupportedOrder,
    body_entry,
    build_matrix,
    classify,
    first_column,
    last_row,
    resolve_branches,
    sigma_power,
    variant_grid,
)
from almost_rainbow.branches import Branch, BranchTable, DEFAULT_TABLES


def step_sigma(r, c, n):
    """Apply the (n-1)-cycle to c, r times, one step at a time (negative r steps backwards)."""
    x = c
    for _ in range(abs(r)):
        if r > 0:
            x = 1 if x == n - 1 else x + 1
        else:
            x = n - 1 if x == 1 else x - 1
    return x


def cyclic_body(n):
    """Body rows 2..n-1: row 2 is 1..n-1, each next row steps every entry back by one."""
    rows = [list(range(1, n))]
    for _ in range(n - 3):
        rows.append([n - 1 if x == 1 else x - 1 for x in rows[-1]])
    return rows


# ---------------------------------------------------------------- classify

@pytest.mark.parametrize(
    "n, tag, k, variant",
    [
        (8, "Type1", 1, "Regular"),
        (6, "Type2", 0, "ExceptionN6"),
        (22, "Type3", 3, "ExceptionN22"),
        (10, "Type3", 1, "ExceptionN10"),
        (16, "Type3", 2, "ExceptionN16"),
        (28, "Type3", 4, "Regular"),
        (12, "Type2", 1, "Regular"),
    ],
)
def test_classify_examples(n, tag, k, variant):
    cls = classify(n)
    assert (cls.tag, cls.k, cls.variant) == (tag, k, variant)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 7, 9, 21, 199])
def test_classify_unsupported(n):
    cls = classify(n)
    assert cls.tag == "Unsupported"
    assert cls.reason


def test_classify_total_and_agrees_with_residue():
    for n in range(1, 401):
        cls = classify(n)
        if n % 2 or n < 6:
            assert cls.tag == "Unsupported"
            continue
        assert cls.tag == {2: "Type1", 0: "Type2", 4: "Type3"}[n % 6]
        if cls.tag == "Type2":
            assert cls.y_value == (n // 2 - 2 if cls.k % 2 == 0 else n // 2 + 1)
        if cls.tag == "Type3":
            assert (cls.variant == "Regular") == (n >= 28)


def test_type2_y_value_for_12():
    assert classify(12).y_value == 7


# ---------------------------------------------------------------- sigma_power

@pytest.mark.parametrize("r, c, n, expected", [(0, 5, 10, 5), (3, 9, 10, 3), (4, 7, 10, 2)])
def test_sigma_power_examples(r, c, n, expected):
    assert sigma_power(r, c, n) == expected


@given(st.integers(3, 40), st.integers(-100, 100), st.integers(-100, 100))
def test_sigma_power_matches_stepping(n, r, c):
    c0 = (c - 1) % (n - 1) + 1
    assert sigma_power(r, c0, n) == step_sigma(r, c0, n)
    assert 1 <= sigma_power(r, c, n) <= n - 1


@given(st.integers(3, 40), st.integers(-50, 50), st.integers(-50, 50), st.data())
def test_sigma_power_composition(n, r1, r2, data):
    c = data.draw(st.integers(1, n - 1))
    assert sigma_power(0, c, n) == c
    assert sigma_power(r1, sigma_power(r2, c, n), n) == sigma_power(r1 + r2, c, n)


def test_residue_rule_is_bijection_for_every_variant():
    for cfg in variant_grid():
        for n in (3, 8, 31):
            images = sorted(cfg.residue(x, n) for x in range(-(n - 1), 0))
            assert images == list(range(1, n))


# ---------------------------------------------------------------- body

def test_body_entry_examples():
    assert body_entry(1, 7, 8) == 7
    assert body_entry(2, 2, 8) == 1
    assert body_entry(2, 3, 8) == 2
    for n in (8, 13, 30):
        for i0 in range(2, n):
            assert body_entry(i0, i0, n) == 1


@pytest.mark.parametrize("i, l", [(0, 3), (8, 3), (3, 1), (3, 9)])
def test_body_entry_rejects_out_of_range(i, l):
    with pytest.raises(ValueError):
        body_entry(i, l, 8)


@pytest.mark.parametrize("n", [6, 8, 12, 22, 40])
def test_body_matches_cyclic_oracle(n):
    body = [[body_entry(i, l, n) for l in range(2, n + 1)] for i in range(2, n)]
    assert body == cyclic_body(n)
    # the first displayed rows: "3 1 2 ..." and "v3, n-1, 1, ..."
    mat = build_matrix(n)
    assert mat.rows()[1][1:3] == [1, 2]
    assert mat.rows()[2][1:3] == [n - 1, 1]


@pytest.mark.parametrize("n", [6, 8, 16, 30, 64])
def test_build_matrix_body_agrees_with_body_entry(n):
    mat = build_matrix(n)
    for i in range(1, n):
        for l in range(2, n + 1):
            assert mat.at(i, l) == body_entry(i, l, n)


# ---------------------------------------------------------------- V and U

def test_first_column_examples():
    assert first_column(8) == [1, 3, 8, 8, 8, 2, 4, 6]
    assert first_column(6) == [1, 5, 6, 6, 4, 3]
    assert first_column(22)[13 - 1] == 17


def test_last_row_examples():
    assert last_row(8) == [6, 4, 2, 8, 8, 8, 7, 1]
    assert last_row(6) == [3, 6, 6, 6, 5, 1]


def test_exception_substitutions():
    # special color sits at row n/2+2 of V and column n/2-1 of U
    for n, x in [(10, 2), (16, 5), (22, 17), (28, 19), (34, 25)]:
        assert first_column(n)[n // 2 + 1] == x
        assert last_row(n)[n // 2 - 2] == x


def test_n22_overridden_bounds():
    u = last_row(22)
    # n-2l only for l <= (n-10)/6 = 2, then n-2(l+1) from l = 3
    assert u[:4] == [20, 18, 14, 12]
    v = first_column(22)
    # 2(i-2)-n up to i = (5n-2)/6 = 18, 2(i-1)-n from i = 19
    assert v[17] == 2 * 16 - 22 and v[18] == 2 * 18 - 22


def test_last_row_shape_for_all_covered():
    for n in range(6, 201, 2):
        if n == 6:
            continue
        u = last_row(n)
        assert u[-2:] == [n - 1, 1]
        assert all(u[l - 1] == n for l in range(n // 2, n - 1))


def test_unsupported_is_contract_violation():
    with pytest.raises(UnsupportedOrder):
        first_column(7)
    with pytest.raises(UnsupportedOrder):
        last_row(4)


def test_branch_tables_partition_every_order():
    for n in range(6, 301, 2):
        cls = classify(n)
        for which in ("first_column", "last_row"):
            ranges = resolve_branches(n, cls, DEFAULT_CONFIG, which)
            covered = [x for lo, hi, _ in ranges for x in range(lo, hi + 1)]
            assert covered == list(range(1, n + 1))


def test_broken_table_is_reported():
    bad = dict(DEFAULT_TABLES)
    t1 = DEFAULT_TABLES["type1"]
    bad["type1"] = BranchTable(t1.first_column[:2] + t1.first_column[3:], t1.last_row)
    cfg = InterpretationConfig(tables=bad)
    with pytest.raises(BranchTableError):
        build_matrix(8, cfg)


def test_corner_mismatch_detected():
    bad = dict(DEFAULT_TABLES)
    t1 = DEFAULT_TABLES["type1"]
    v = t1.first_column[:-1] + (Branch("n", "n", "n-3"),)
    bad["type1"] = BranchTable(v, t1.last_row)
    with pytest.raises(CornerMismatch):
        build_matrix(8, InterpretationConfig(tables=bad))


# ---------------------------------------------------------------- build_matrix

def test_build_matrix_examples():
    mat = build_matrix(8)
    assert mat.rows()[0] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert mat.at(8, 1) == 6
    with pytest.raises(UnsupportedOrder):
        build_matrix(4)


def test_matrix_is_immutable():
    mat = build_matrix(8)
    with pytest.raises(ValueError):
        mat.entries[0, 0] = 5


@pytest.mark.parametrize("n", [n for n in range(6, 81, 2)])
def test_structural_invariants(n):
    mat = build_matrix(n)
    g = mat.entries
    assert g.shape == (n, n)
    assert ((g >= 1) & (g <= n)).all()
    assert all(mat.at(i, i) == 1 for i in range(1, n + 1))
    assert mat.rows()[0] == list(range(1, n + 1))
    body = g[1 : n - 1, 1:]
    assert body.max() <= n - 1
    for row in body:
        assert len(set(row.tolist())) == n - 1
    for col in body.T:
        assert len(set(col.tolist())) == n - 2
    assert first_column(n)[-1] == last_row(n)[0]


def test_config_names_round_trip():
    for cfg in variant_grid():
        assert InterpretationConfig.from_name(cfg.name) == cfg
    assert variant_grid()[0] == DEFAULT_CONFIG
    with pytest.raises(ValueError):
        InterpretationConfig.from_name("sideways")


# ---------------------------------------------------------------- serialization

@pytest.mark.parametrize("n", [6, 8, 10, 22, 50])
def test_json_and_csv_round_trip(n):
    mat = build_matrix(n)
    a = ColoringMatrix.from_json(mat.to_json())
    b = ColoringMatrix.from_csv(mat.to_csv(), type_tag=mat.type_tag)
    assert a == mat == b
    assert a.to_json() == mat.to_json()
    assert b.to_csv() == mat.to_csv()


def test_csv_has_no_header_and_n_lines():
    text = build_matrix(8).to_csv()
    lines = text.splitlines()
    assert len(lines) == 8 and lines[0] == "1,2,3,4,5,6,7,8"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("1,2\n2,x\n", 2, 2),
        ("1,2\n0,1\n", 2, 1),
        ("1,2,3\n2,1\n", None, None),
    ],
)
def test_csv_parse_errors(text, line, column):
    with pytest.raises(MatrixParseError) as exc:
        ColoringMatrix.from_csv(text)
    if line is not None:
        assert (exc.value.line, exc.value.column) == (line, column)


def test_json_parse_errors():
    with pytest.raises(MatrixParseError):
        ColoringMatrix.from_json("{not json")
    with pytest.raises(MatrixParseError):
        ColoringMatrix.from_json('{"n": 3, "entries": [[1,2],[2,1]]}')
    with pytest.raises(MatrixParseError):
        ColoringMatrix.from_json('{"entries": [[1,2],[2,3]]}')


# ---------------------------------------------------------------- calibration

def test_calibrate_single_order():
    cal = calibrate_interpretation([8])
    assert cal.config == DEFAULT_CONFIG
    assert cal.statuses[8].status == "pass"


def test_calibrate_type2_orders():
    cal = calibrate_interpretation([12, 18, 24])
    assert cal.config == DEFAULT_CONFIG
    assert all(s.passed for s in cal.statuses.values())


def test_calibrate_order_10_is_a_finding():
    cal = calibrate_interpretation([10])
    assert cal.config == DEFAULT_CONFIG
    assert not cal.statuses[10].passed
    assert all(not row[10].passed for row in cal.table.values())
    assert len(cal.table) == len(variant_grid())


def test_calibrate_rejects_unsupported():
    with pytest.raises(UnsupportedOrder):
        calibrate_interpretation([7])
