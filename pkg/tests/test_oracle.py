import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multidiag.errors import ShapeMismatch, SingularMatrix
from multidiag.field import GaussianRational
from multidiag.oracle import dense_det, dense_identity, dense_inv, dense_mul

from conftest import rationals

F = Fraction
A3 = [[F(2), F(0), F(1)], [F(0), F(3), F(0)], [F(1), F(0), F(4)]]


def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in M[1:]])
               for j in range(len(M)))


def test_dense_mul_examples():
    assert dense_mul([[F(1), F(2)], [F(3), F(4)]], [[F(5), F(6)], [F(7), F(8)]]) == [[19, 22], [43, 50]]
    assert dense_mul(A3, dense_identity(3)) == A3
    assert dense_mul(A3, [[F(0)] * 3] * 3) == [[0] * 3] * 3
    with pytest.raises(ShapeMismatch):
        dense_mul([[F(1), F(2)]], [[F(1), F(2)]])


def test_dense_det_examples():
    assert dense_det(A3) == 21 == cofactor_det(A3)
    assert dense_det(dense_identity(4)) == 1
    assert dense_det([[F(1), F(2)], [F(1), F(2)]]) == 0
    assert dense_det([[0j + 2, 0j], [0j, 4 + 0j]]) == 8


def test_dense_det_needs_row_swap():
    M = [[F(0), F(1)], [F(1), F(0)]]
    assert dense_det(M) == -1


def test_dense_det_gaussian():
    i = GaussianRational(0, 1)
    M = [[i, F(1)], [F(1), i]]
    assert dense_det(M) == -2


def test_dense_inv_examples():
    assert dense_inv(dense_identity(3)) == dense_identity(3)
    assert dense_inv([[F(2), F(0)], [F(0), F(4)]]) == [[F(1, 2), 0], [0, F(1, 4)]]
    assert dense_inv(A3) == [[F(4, 7), 0, F(-1, 7)], [0, F(1, 3), 0], [F(-1, 7), 0, F(2, 7)]]
    with pytest.raises(SingularMatrix):
        dense_inv([[F(1), F(2)], [F(2), F(4)]])


square = st.integers(1, 5).flatmap(
    lambda m: st.lists(st.lists(rationals, min_size=m, max_size=m), min_size=m, max_size=m)
)


@given(square)
def test_bareiss_matches_cofactor(M):
    assert dense_det(M) == cofactor_det(M)


@settings(max_examples=50)
@given(square, st.data())
def test_det_multiplicative(M, data):
    m = len(M)
    N = data.draw(st.lists(st.lists(rationals, min_size=m, max_size=m), min_size=m, max_size=m))
    assert dense_det(dense_mul(M, N)) == dense_det(M) * dense_det(N)


@given(square)
def test_inverse_involution(M):
    if dense_det(M) == 0:
        return
    X = dense_inv(M)
    assert dense_mul(M, X) == dense_identity(len(M))
    assert dense_inv(X) == M


def test_float_paths():
    rng = random.Random(3)
    M = [[complex(rng.uniform(-1, 1)) + (5 if i == j else 0) for j in range(6)] for i in range(6)]
    X = dense_inv(M)
    R = dense_mul(M, X)
    assert max(abs(R[i][j] - (i == j)) for i in range(6) for j in range(6)) < 1e-12
    exact = dense_det([[Fraction(x.real) for x in row] for row in M])
    assert abs(dense_det(M) - float(exact)) <= 1e-12 * abs(float(exact))
