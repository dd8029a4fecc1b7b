from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catrank.exactq import (
    QMatrix,
    QVector,
    kernel_basis,
    mat_invert,
    parse_rat,
    rat,
    rat_str,
    solve_linear,
)


def test_rat_canonical_form():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(3, -6) == Fraction(-1, 2)
    assert rat(3, -6).denominator == 2
    assert rat(0, 7) == Fraction(0, 1)
    assert rat(0, 7).denominator == 1


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_rat_str_round_trip():
    cases = [rat(1, 2), rat(-1, 2), rat(5), rat(0), rat(-7, 3), rat(100, 4)]
    for q in cases:
        s = rat_str(q)
        assert parse_rat(s) == q
        if q.denominator == 1:
            assert "/" not in s
        else:
            assert s.endswith(f"/{q.denominator}")


def test_mat_invert_2x2():
    a = QMatrix.from_rows([[2, 1], [1, 2]])
    b = mat_invert(a)
    assert b == QMatrix.from_rows(
        [[rat(2, 3), rat(-1, 3)], [rat(-1, 3), rat(2, 3)]]
    )
    assert a.mul(b).is_identity()
    assert b.mul(a).is_identity()


def test_mat_invert_identity():
    for n in range(4):
        i_n = QMatrix.identity(n)
        assert mat_invert(i_n) == i_n


def test_mat_invert_singular():
    a = QMatrix.from_rows([[1, 1], [1, 1]])
    assert mat_invert(a) == "singular"


def test_mat_invert_empty():
    a = QMatrix(0, 0, [])
    inv = mat_invert(a)
    assert isinstance(inv, QMatrix)
    assert inv.rows == 0 and inv.cols == 0


def test_mat_invert_non_square():
    with pytest.raises(ValueError):
        mat_invert(QMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_solve_weighting_section8_shape():
    a = QMatrix.from_rows([[2, 1], [1, 2]])
    rep = solve_linear(a, QVector([1, 1]))
    assert rep.consistent
    assert rep.kernel_dim == 0
    assert rep.solution.entries == (rat(1, 3), rat(1, 3))
    assert rep.solution.sum() == rat(2, 3)


def test_solve_identity():
    a = QMatrix.identity(3)
    b = QVector([5, rat(-1, 2), 0])
    rep = solve_linear(a, b)
    assert rep.consistent and rep.solution.entries == b.entries


def test_solve_inconsistent_zeta_A():
    # the four-object category whose weighting system has no solution:
    # rows force k4 = 0 (row2 - row1) and k4 = 1 (row 4) simultaneously
    zeta = QMatrix.from_rows(
        [
            [2, 2, 1, 1],
            [2, 2, 1, 2],
            [1, 1, 1, 1],
            [0, 0, 0, 1],
        ]
    )
    rep = solve_linear(zeta, QVector([1, 1, 1, 1]))
    assert not rep.consistent
    assert rep.solution is None


def test_solve_underdetermined_free_vars_zeroed():
    # x + y = 1 with one free column: particular solution must zero the free var
    a = QMatrix.from_rows([[1, 1]])
    rep = solve_linear(a, QVector([1]))
    assert rep.consistent
    assert rep.kernel_dim == 1
    assert rep.solution.entries == (Fraction(1), Fraction(0))
    basis = kernel_basis(a)
    assert len(basis) == 1
    assert a.mul_vec(basis[0]).entries == (Fraction(0),)


def test_solve_empty_system():
    rep = solve_linear(QMatrix(0, 0, []), QVector([]))
    assert rep.consistent
    assert rep.kernel_dim == 0
    assert rep.solution.entries == ()


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear(QMatrix.identity(2), QVector([1, 2, 3]))


def test_matrix_reorder_round_trip():
    a = QMatrix.from_rows([[1, 2], [3, 4]], row_labels=["r0", "r1"], col_labels=["c0", "c1"])
    b = a.reorder(["r1", "r0"], ["c1", "c0"])
    assert b.get(0, 0) == 4 and b.get(1, 1) == 1
    assert b.reorder(["r0", "r1"], ["c0", "c1"]) == a


def test_labels_validated():
    with pytest.raises(ValueError):
        QVector([1, 2], labels=["a"])
    with pytest.raises(ValueError):
        QVector([1, 2], labels=["a", "a"])
    with pytest.raises(ValueError):
        QMatrix(2, 2, [1, 2, 3])


rationals = st.builds(
    Fraction,
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=1, max_value=10**4),
)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(st.integers(min_value=1, max_value=5), st.data())
def test_random_invertible_round_trip(n, data):
    # random integer matrices; skip the singular ones
    ent = data.draw(
        st.lists(
            st.integers(min_value=-6, max_value=6), min_size=n * n, max_size=n * n
        )
    )
    a = QMatrix(n, n, ent)
    inv = mat_invert(a)
    if inv == "singular":
        rep = solve_linear(a, QVector([0] * n))
        assert rep.kernel_dim > 0
    else:
        assert a.mul(inv).is_identity()
        assert inv.mul(a).is_identity()


@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4), st.data())
def test_solve_consistency_property(rows, cols, data):
    ent = data.draw(
        st.lists(
            st.integers(min_value=-5, max_value=5),
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    a = QMatrix(rows, cols, ent)
    bvals = data.draw(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=rows, max_size=rows)
    )
    b = QVector(bvals)
    rep = solve_linear(a, b)
    if rep.consistent:
        assert a.mul_vec(rep.solution).entries == b.entries
    else:
        assert rep.solution is None
