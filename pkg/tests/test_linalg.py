from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baslab import linalg


def F(x):
    return Fraction(x)


def test_rref_simple():
    rows, piv = linalg.rref([[F(2), F(4)], [F(1), F(2)]])
    assert piv == [0]
    assert rows == [[F(1), F(2)]]


def test_nullspace_known_kernel():
    # x + y + z = 0, x - z = 0  ->  kernel spanned by (1, -2, 1)
    basis = linalg.nullspace([[1, 1, 1], [1, 0, -1]])
    assert len(basis) == 1
    v = basis[0]
    assert [v[0], v[1], v[2]] == [F(1), F(-2), F(1)]


def test_nullspace_of_empty_matrix_is_full_space():
    basis = linalg.nullspace([], n_cols=3)
    assert len(basis) == 3


def test_solve_consistent_and_inconsistent():
    assert linalg.solve([[1, 1], [1, -1]], [F(3), F(1)]) == [F(2), F(1)]
    assert linalg.solve([[1, 1], [2, 2]], [F(1), F(3)]) is None


def test_inverse_round_trip():
    a = [[F(2), F(1)], [F(5), F(3)]]
    inv = linalg.inverse(a)
    assert linalg.mat_eq(linalg.mat_mul(a, inv), linalg.identity(2))
    assert linalg.inverse([[F(1), F(2)], [F(2), F(4)]]) is None


def test_stack_solve_matrix_left_inverse():
    basis = [[F(1), F(0), F(2)], [F(0), F(1), F(1)]]
    lsolve = linalg.stack_solve_matrix(basis)
    v = [F(3), F(-1), F(5)]  # 3*b0 - 1*b1
    coords = linalg.mat_vec(lsolve, v)
    assert coords == [F(3), F(-1)]


@st.composite
def rational_matrix(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=1, max_value=4))
    return [
        [Fraction(draw(st.integers(-6, 6)), draw(st.integers(1, 3)))
         for _ in range(m)]
        for _ in range(n)
    ]


@settings(max_examples=60, deadline=None)
@given(rational_matrix())
def test_rank_nullity_and_kernel_property(mat):
    cols = len(mat[0])
    basis = linalg.nullspace(mat)
    assert linalg.rank(mat) + len(basis) == cols
    for v in basis:
        assert all(sum(row[k] * v[k] for k in range(cols)) == 0 for row in mat)


@settings(max_examples=40, deadline=None)
@given(rational_matrix())
def test_rref_is_projection_of_row_space(mat):
    rows, piv = linalg.rref(mat)
    # every original row lies in the span of the reduced rows
    for row in mat:
        coords = linalg.coords_in_rows(rows, [Fraction(x) for x in row]) if rows else (
            [] if all(x == 0 for x in row) else None)
        assert coords is not None
