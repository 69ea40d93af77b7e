from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multidiag import mdmatrix as mdm
from multidiag.errors import OffLatticeNonzero, PreconditionViolated, ShapeMismatch, TrailingNonzero
from multidiag.field import FLOAT_FIELD, GaussianRational
from multidiag.mdmatrix import MDMatrix, entry, from_dense, identity, to_dense, trace, zero

from conftest import FIXTURE_A, gaussians, md_matrices, shapes

F = Fraction


def test_identity_entries():
    E = identity(5, 2)
    assert all(entry(E, i, i) == 1 for i in range(6))
    assert entry(E, 0, 2) == 0
    assert to_dense(identity(2, 1)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_superdiagonal_is_row_indexed():
    A = MDMatrix(2, 2, {1: [7, 0, 0]})
    assert entry(A, 0, 2) == 7
    B = MDMatrix(4, 1, {2: [1, 2, 3, 0, 0], -2: [4, 5, 6, 0, 0]})
    assert [entry(B, i, i + 2) for i in range(3)] == [1, 2, 3]
    assert [entry(B, j + 2, j) for j in range(3)] == [4, 5, 6]


def test_absent_diagonal_reads_zero():
    assert entry(FIXTURE_A, 0, 1) == 0
    assert FIXTURE_A.diag(1) == FIXTURE_A.diags[1]
    assert zero(3, 1).diag(-2).is_zero()


def test_fixture_dense():
    assert to_dense(FIXTURE_A) == [[2, 0, 1], [0, 3, 0], [1, 0, 4]]
    assert to_dense(zero(2, 1)) == [[0] * 3] * 3


def test_from_dense_examples():
    A = from_dense([[1, 1], [0, 1]], 1)
    assert A.diags == {0: A.diag(0), 1: A.diag(1)}
    assert list(A.diag(0)) == [1, 1] and list(A.diag(1)) == [1, 0]
    B = from_dense([[1, 0, 0], [0, 1, 0], [1, 0, 1]], 1)
    assert list(B.diag(-2)) == [1, 0, 0]


def test_from_dense_rejects_off_lattice():
    with pytest.raises(OffLatticeNonzero) as info:
        from_dense([[2, 5, 1], [0, 3, 0], [1, 0, 4]], 2)
    assert (info.value.i, info.value.j) == (0, 1)


def test_from_dense_float_tolerates_roundoff():
    M = [[2.0, 1e-17, 1.0], [0.0, 3.0, 0.0], [1.0, 0.0, 4.0]]
    assert from_dense(M, 2, FLOAT_FIELD).diag(0)[1] == 3.0


def test_trace():
    assert trace(identity(4, 3)) == 5
    assert trace(FIXTURE_A) == 9
    assert trace(zero(3, 3)) == 0


def test_construction_validation():
    with pytest.raises(TrailingNonzero):
        MDMatrix(2, 2, {1: [1, 1, 0]})
    with pytest.raises(PreconditionViolated):
        MDMatrix(2, 2, {2: [1, 0, 0]})
    with pytest.raises(PreconditionViolated):
        MDMatrix(2, 3)
    with pytest.raises(ShapeMismatch):
        MDMatrix(2, 1, {0: [1, 2]})


def test_zero_diagonals_are_dropped():
    A = MDMatrix(3, 1, {0: [1, 2, 3, 4], 2: [0, 0, 0, 0]})
    assert A.offsets == (0,)
    assert A == MDMatrix(3, 1, {0: [1, 2, 3, 4]})


def test_add_identity_and_zero():
    assert zero(2, 2) + FIXTURE_A == FIXTURE_A
    assert FIXTURE_A - FIXTURE_A == zero(2, 2)


def test_embedding_of_narrower_band():
    # a k-tridiagonal matrix is a member with the outer diagonals zero
    A = MDMatrix(6, 2, {-1: [1, 2, 3, 4, 0, 0, 0], 0: [1] * 7})
    assert A.s == 3 and A.offsets == (-1, 0)
    assert mdm.lattice_violations(to_dense(A), 2) == []


@given(shapes().flatmap(lambda nk: md_matrices(*nk)))
def test_dense_round_trip(A):
    D = to_dense(A)
    assert from_dense(D, A.k) == A
    assert mdm.lattice_violations(D, A.k) == []
    s = A.s
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if abs(i - j) % A.k or abs(i - j) > s * A.k:
                assert x == 0


@given(shapes().flatmap(lambda nk: md_matrices(*nk)))
def test_json_round_trip(A):
    text = mdm.dumps(A)
    assert mdm.loads(text) == A
    assert mdm.dumps(mdm.loads(text)) == text


@given(shapes(max_n=4).flatmap(lambda nk: md_matrices(*nk, elements=gaussians)))
def test_json_round_trip_gaussian(A):
    assert mdm.loads(mdm.dumps(A)) == A


def test_json_layout():
    doc = mdm.to_json_dict(FIXTURE_A)
    assert doc == {
        "n": 2, "k": 2, "mode": "exact",
        "diagonals": {"-1": ["1", "0", "0"], "0": ["2", "3", "4"], "1": ["1", "0", "0"]},
    }
    Z = MDMatrix(1, 1, {0: [GaussianRational(0, 1), F(1, 2)]})
    assert mdm.to_json_dict(Z)["diagonals"]["0"] == ["0+1i", "1/2"]


@pytest.mark.parametrize("doc, exc", [
    ({"n": 2, "k": 2, "diagonals": {"1": ["1", "2", "0"]}}, TrailingNonzero),
    ({"n": 2, "k": 2, "diagonals": {"2": ["1", "0", "0"]}}, PreconditionViolated),
    ({"n": 2, "k": 2, "diagonals": {"0": ["1", "2"]}}, ShapeMismatch),
    ({"n": 2, "k": 2, "diagonals": {"x": ["1", "2", "3"]}}, ValueError),
    ({"k": 2}, ValueError),
])
def test_json_parser_rejects(doc, exc):
    with pytest.raises(exc):
        mdm.from_json_dict(doc)


def test_json_float_mode():
    A = mdm.from_json_dict({"n": 1, "k": 1, "mode": "float", "diagonals": {"0": ["0.5", "1e-3+2i"]}})
    assert A.field.mode == "float"
    assert A.diag(0)[1] == complex(1e-3, 2)
    assert mdm.to_json_dict(A)["diagonals"]["0"] == ["0.5", "0.001+2.0i"]


def test_convert_exact_to_float():
    B = mdm.convert(FIXTURE_A, FLOAT_FIELD)
    assert to_dense(B)[2][2] == 4.0 + 0j
