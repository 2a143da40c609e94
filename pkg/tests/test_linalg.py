"""Exact rational linear algebra against sympy as an independent oracle."""

import random

import sympy
from hypothesis import given
from hypothesis import strategies as st

import pytest
from morinlab.errors import SingularMatrixError
from morinlab.linalg import (identity, mat_inv, mat_mul, mat_vec, rat_det,
                             rat_rank, transpose)
from morinlab.rationals import QQ


def random_matrix(rng, rows, cols):
    return [[QQ(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(cols)]
            for _ in range(rows)]


def to_sympy(A):
    return sympy.Matrix([[sympy.Rational(str(x)) for x in row] for row in A])


def test_rank_and_det_match_sympy():
    rng = random.Random(10)
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        A = random_matrix(rng, rows, cols)
        assert rat_rank(A) == to_sympy(A).rank()
        if rows == cols:
            assert sympy.Rational(str(rat_det(A))) == to_sympy(A).det()


def test_rank_of_degenerate_inputs():
    assert rat_rank([]) == 0
    assert rat_rank([[QQ(0), QQ(0)]]) == 0


def test_inverse_multiplies_to_identity():
    rng = random.Random(11)
    found = 0
    while found < 15:
        n = rng.randint(1, 4)
        A = random_matrix(rng, n, n)
        if not rat_det(A):
            continue
        found += 1
        assert mat_mul(A, mat_inv(A)) == identity(n)


def test_inverse_rejects_singular():
    with pytest.raises(SingularMatrixError):
        mat_inv([[QQ(1), QQ(2)], [QQ(2), QQ(4)]])


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_bounds_and_transpose(rows, cols, data):
    A = [[QQ(data.draw(st.integers(-3, 3))) for _ in range(cols)]
         for _ in range(rows)]
    r = rat_rank(A)
    assert 0 <= r <= min(rows, cols)
    assert rat_rank(transpose(A)) == r


def test_det_multiplicative():
    rng = random.Random(12)
    for _ in range(20):
        n = rng.randint(1, 4)
        A, B = random_matrix(rng, n, n), random_matrix(rng, n, n)
        assert rat_det(mat_mul(A, B)) == rat_det(A) * rat_det(B)


def test_mat_vec():
    A = [[QQ(1), QQ(2)], [QQ(3), QQ(4)]]
    assert mat_vec(A, [QQ(1), QQ(-1)]) == [QQ(-1), QQ(-1)]
