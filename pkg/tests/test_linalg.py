from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from symcell.errors import DimensionMismatch, Inconsistent, Singular
from symcell.field import GF, QQ
from symcell.linalg import (
    Matrix,
    invert,
    kernel,
    rank,
    rref,
    solve,
    span,
    subspace_equal,
    subspace_leq,
    subspace_sum,
)

small = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


fields = st.sampled_from([QQ, GF(2), GF(3), GF(5), GF(7)])


def bidiagonal(n, field):
    return Matrix.from_rows(field, [[1 if j in (i, i + 1) else 0 for j in range(n)] for i in range(n)])


def tridiagonal(n, field):
    return Matrix.from_rows(
        field, [[2 if i == j else 1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)])


def test_bidiagonal_rank():
    assert rank(bidiagonal(4, QQ)) == 4


def test_tridiagonal_over_f5():
    # determinant n + 1 = 5 vanishes mod 5; sympy gives the determinant independently
    assert sympy.Matrix(4, 4, lambda i, j: 2 if i == j else 1 if abs(i - j) == 1 else 0).det() == 5
    assert kernel(tridiagonal(4, GF(5))).dim == 1
    assert kernel(tridiagonal(4, QQ)).dim == 0
    assert kernel(tridiagonal(4, GF(7))).dim == 0


def test_antidiagonal_solve():
    a = Matrix.from_rows(QQ, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    x = solve(a, Matrix.column(QQ, [1, 2, 3]))
    assert x.col(0) == (3, 2, 1)


def test_inconsistent_system():
    a = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    with pytest.raises(Inconsistent):
        solve(a, Matrix.column(QQ, [1, 2]))


def test_singular_inverse():
    with pytest.raises(Singular):
        invert(Matrix.from_rows(GF(5), [[1, 2], [3, 1]]))  # det -5


def test_subspace_order_and_sum():
    a = span(QQ, [[1, 0, 0]], 3)
    b = span(QQ, [[1, 1, 0], [0, 1, 0]], 3)
    assert a < b
    assert not b <= a
    assert subspace_sum(a, span(QQ, [[0, 0, 1]], 3)).dim == 2
    assert subspace_equal(b, span(QQ, [[2, 0, 0], [0, 3, 0]], 3))
    with pytest.raises(DimensionMismatch):
        subspace_leq(a, span(QQ, [[1, 0]], 2))


@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(Matrix.from_rows(QQ, rows)) == sympy.Matrix(rows).rank()


@given(matrices(), fields)
def test_rref_idempotent(rows, field):
    r, k = rref(Matrix.from_rows(field, rows))
    assert rref(r) == (r, k)


@settings(max_examples=250)
@given(matrices(), fields)
def test_rank_nullity(rows, field):
    m = Matrix.from_rows(field, rows)
    null = kernel(m)
    assert rank(m) + null.dim == m.ncols
    for v in null.basis:
        assert all(x == 0 for x in m.apply(v))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)),
       fields)
def test_invert_round_trip(rows, field):
    m = Matrix.from_rows(field, rows)
    n = m.nrows
    if rank(m) < n:
        with pytest.raises(Singular):
            invert(m)
    else:
        assert m @ invert(m) == Matrix.identity(field, n)


@given(matrices(max_rows=4, max_cols=4), matrices(max_rows=4, max_cols=4))
def test_subspace_sum_contains_both(r1, r2):
    c = min(len(r1[0]), len(r2[0]))
    a = span(QQ, [r[:c] for r in r1], c)
    b = span(QQ, [r[:c] for r in r2], c)
    s = subspace_sum(a, b)
    assert a <= s and b <= s
    assert s.dim <= a.dim + b.dim


def test_fraction_entries_exact():
    m = Matrix.from_rows(QQ, [[Fraction(1, 3), 1], [1, 3]])
    assert rank(m) == 1
