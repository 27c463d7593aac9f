"""Triangle construction, oracles, and the second-kind transforms."""

import os
from fractions import Fraction

import pytest

from fstirling.fspec import linear, parse_fspec, qpow
from fstirling.stirling import (
    s1_column_closed_forms,
    s1_entry_oracle,
    s1_triangle,
    s2_diff_coeff,
    s2_entry,
    s2_geom_transform_check,
    s2star_egf_check,
    s2star_entry,
    s2star_ogf_check,
)

DATA = os.path.join(os.path.dirname(__file__), "data")
TABLE = parse_fspec(f"table:{os.path.join(DATA, 'table12.json')}")

MATRIX = [
    (linear(1, 0), 1),
    (linear(1, 0), Fraction(3, 2)),
    (linear(1, 0), "t"),
    (linear(2, 1), 1),
    (linear(2, 1), Fraction(3, 2)),
    (linear(2, 1), "t"),
    (qpow(1), 1),
    (TABLE, 1),
    (TABLE, Fraction(3, 2)),
    (TABLE, "t"),
]


def classical_first_kind(N):
    """Independent recurrence for unsigned classical Stirling numbers:
    c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)."""
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            left = prev[k - 1] if 1 <= k <= n else 0
            up = prev[k] if k <= n - 1 else 0
            row.append(left + (n - 1) * up)
        rows.append(row)
    return rows


@pytest.mark.parametrize("spec,t", MATRIX)
def test_oracle_equivalence(spec, t):
    N = 12
    tri = s1_triangle(spec, t, N)
    for n in range(N + 1):
        for k in range(n + 1):
            assert tri.entry(n, k) == s1_entry_oracle(spec, t, n, k), (n, k)


def test_classical_anchor_row_4():
    tri = s1_triangle(linear(1, 0), 1, 4)
    row = [tri.entry(4, k).constant_value() for k in range(1, 5)]
    assert row == [6, 11, 6, 1]


def test_matches_independent_classical_recurrence():
    N = 12
    tri = s1_triangle(linear(1, 0), 1, N)
    classical = classical_first_kind(N)
    for n in range(N + 1):
        for k in range(n + 1):
            assert tri.entry(n, k).constant_value() == classical[n][k]


def test_q_triangle_has_nonnegative_integer_coefficients():
    tri = s1_triangle(qpow(1), 1, 10)
    for n in range(11):
        for k in range(n + 1):
            for c in tri.entry(n, k).terms.values():
                assert c.denominator == 1 and c >= 0


def test_triangle_boundaries():
    tri = s1_triangle(linear(2, 1), 1, 6)
    for n in range(7):
        assert tri.entry(n, n) == 1
        assert tri.entry(n, -1) == 0
        assert tri.entry(n, n + 1) == 0
    for n in range(1, 7):
        assert tri.entry(n, 0) == 0
    with pytest.raises(IndexError):
        tri.entry(7, 1)


def test_symbolic_t_entry_anchor():
    # row 3: e_1 of {f(1)/t, f(2)/t^2} for entry (3,2)
    tri = s1_triangle(linear(1, 0), "t", 3)
    assert tri.entry(3, 2).terms == {-1: Fraction(1), -2: Fraction(2)}


def test_column_closed_forms():
    for spec, t in MATRIX:
        rep = s1_column_closed_forms(spec, t, 6)
        assert rep.passed, rep.failures[:3]


def test_s2_entry_anchors():
    spec = linear(1, 0)
    assert s2_entry(spec, 1, 1, 1) == 1
    assert s2_entry(spec, 1, 2, 2) == 0  # -2*1/1! + 4/2!
    for n in range(1, 5):
        assert s2_entry(spec, 1, n, 0) == 0
    # n=0: full alternating sum -1 + 3 - 3/2 + 1/6
    assert s2_entry(spec, 1, 0, 3) == Fraction(2, 3)


def test_s2_diff_coeff_reduces_to_classical():
    # classical second kind {n,k}: rows n=0..4
    classical = {(2, 1): 1, (2, 2): 1, (3, 2): 3, (3, 3): 1, (4, 2): 7, (4, 3): 6}
    spec = linear(1, 0)
    for (n, k), v in classical.items():
        assert s2_diff_coeff(spec, 1, n, k) == v


@pytest.mark.parametrize("spec,t", MATRIX)
def test_geom_transform(spec, t):
    for n in range(6):
        for k in range(4):
            rep = s2_geom_transform_check(spec, t, n, k)
            assert rep.passed, rep.failures[:3]


def test_s2star_anchor():
    spec = linear(1, 0)
    # k=1, j=2: C(2,1)(-1)/2!/1 + C(2,2)/2!/2 = -1 + 1/4
    assert s2star_entry(spec, 1, 2) == Fraction(-3, 4)
    rep = s2star_ogf_check(spec, 1, 4)
    assert rep.passed
    # the OGF identity reproduces 1/f(2) = 1/2 at n=2
    cell = [c for c in rep.cells if c.indices == (2,)][0]
    assert cell.lhs == Fraction(1, 2)


def test_s2star_transforms_numeric_specs():
    for spec in (linear(1, 0), linear(2, 1), TABLE):
        for k in range(4):
            assert s2star_ogf_check(spec, k, 10).passed
        for r in range(4):
            assert s2star_egf_check(spec, r, 8).passed
