"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions (or ints).  Row reduction is done
fraction-free on primitive integer rows, so entries stay integers and gcd
normalization keeps them small; results are converted back to Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = list
Mat = list


def _primitive_int_row(row):
    """Scale a row of rationals to a primitive integer row (gcd 1)."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) if isinstance(x, Fraction) else int(x) * denom for x in row]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _echelon(int_rows):
    """In-place fraction-free echelon form on primitive integer rows.

    Returns the list of (row_index, pivot_col) in elimination order.
    """
    rows = int_rows
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        a = pr[c]
        for i in range(n_rows):
            if i == r:
                continue
            b = rows[i][c]
            if b == 0:
                continue
            ri = rows[i]
            new = [a * ri[k] - b * pr[k] for k in range(n_cols)]
            g = 0
            for v in new:
                g = gcd(g, abs(v))
            if g > 1:
                new = [v // g for v in new]
            rows[i] = new
        pivots.append((r, c))
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(mat) -> int:
    if not mat or not mat[0]:
        return 0
    rows = [_primitive_int_row(row) for row in mat]
    return len(_echelon(rows))


def rref(mat):
    """Reduced row-echelon form over Q: (rows as Fractions, pivot columns)."""
    if not mat:
        return [], []
    rows = [_primitive_int_row(row) for row in mat]
    pivots = _echelon(rows)
    out = []
    cols = []
    for r, c in pivots:
        a = rows[r][c]
        out.append([Fraction(v, a) for v in rows[r]])
        cols.append(c)
    return out, cols


def nullspace(mat, n_cols=None):
    """Basis of the right kernel {v : mat @ v = 0}, deterministic order.

    `n_cols` is required when mat has no rows.
    """
    if not mat:
        if n_cols is None:
            raise ValueError("n_cols required for empty matrix")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    n_cols = len(mat[0])
    red, piv_cols = rref(mat)
    piv_set = set(piv_cols)
    free_cols = [c for c in range(n_cols) if c not in piv_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, c in zip(range(len(piv_cols)), piv_cols):
            v[c] = -red[r][fc]
        basis.append(_scaled_primitive(v))
    return basis


def _scaled_primitive(v):
    """Rescale a rational vector to primitive integer entries, as Fractions."""
    ints = _primitive_int_row(v)
    # fix sign: first nonzero entry positive
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return [Fraction(x) for x in ints]


def solve(mat, rhs):
    """One solution of mat @ x = rhs, or None if inconsistent.

    Free variables are set to zero (deterministic).
    """
    if not mat:
        return None
    n_cols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    red, piv_cols = rref(aug)
    x = [Fraction(0)] * n_cols
    for r, c in zip(range(len(piv_cols)), piv_cols):
        if c == n_cols:
            return None  # pivot in augmented column
        x[c] = red[r][n_cols]
    # verify (guards against free-variable interactions)
    for row, b in zip(mat, rhs):
        acc = sum(Fraction(a) * xv for a, xv in zip(row, x))
        if acc != b:
            return None
    return x


def mat_mul(a, b):
    if not a or not b:
        return []
    n, m, p = len(a), len(b), len(b[0])
    bt = [[b[k][j] for k in range(m)] for j in range(p)]
    return [[sum(row[k] * col[k] for k in range(m)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def inverse(a):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, piv_cols = rref(aug)
    if piv_cols[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def row_space_basis(mat):
    """Echelon basis of the row space (canonical for subspace comparison)."""
    red, _ = rref(mat)
    return red


def coords_in_rows(basis_rows, v):
    """Coordinates of v in the span of basis_rows, or None if outside.

    basis_rows must be linearly independent.
    """
    if not basis_rows:
        return [] if all(x == 0 for x in v) else None
    at = transpose(basis_rows)
    return solve(at, list(v))


def stack_solve_matrix(basis_rows):
    """Left inverse L with L @ basis_rows^T = I, for repeated coordinate solves."""
    at = transpose(basis_rows)  # n x k, full column rank k
    # Solve via rref of [A | I]
    n = len(at)
    k = len(basis_rows)
    aug = [list(at[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv_cols = rref(aug)
    if piv_cols[:k] != list(range(k)):
        raise ValueError("basis rows are linearly dependent")
    return [row[k:] for row in red[:k]]  # k x n
