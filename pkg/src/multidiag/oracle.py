"""Dense brute-force reference routines.

These work on plain lists of lists and know nothing about diagonal
storage; they exist to cross-check the structured code (tests, ``check``
subcommand).  Sizes beyond a few hundred are not a goal.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import ShapeMismatch, SingularMatrix
from .field import EXACT, GaussianRational, mode_of


def _mode(A):
    for row in A:
        for x in row:
            return mode_of(x)
    return EXACT


def _zero_like(A):
    return Fraction(0) if _mode(A) == EXACT else 0j


def dense_identity(size, mode=EXACT):
    one, zero = (Fraction(1), Fraction(0)) if mode == EXACT else (1 + 0j, 0j)
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def dense_mul(A, B):
    if not A or len(A[0]) != len(B):
        raise ShapeMismatch("inner dimensions differ")
    cols = len(B[0])
    zero = _zero_like(A)
    out = []
    for row in A:
        acc = [zero] * cols
        for l, a in enumerate(row):
            if a == 0:
                continue
            brow = B[l]
            for j in range(cols):
                acc[j] += a * brow[j]
        out.append(acc)
    return out


def dense_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def inf_norm(A) -> float:
    return max((sum(abs(x) for x in row) for row in A), default=0.0)


def _bareiss(m, exact_div):
    """Fraction-free elimination on a copy; returns the determinant."""
    size = len(m)
    sign = 1
    prev = 1
    for c in range(size - 1):
        if m[c][c] == 0:
            for r in range(c + 1, size):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[c][c]
        for r in range(c + 1, size):
            rr, rc = m[r], m[c]
            f = rr[c]
            for j in range(c + 1, size):
                rr[j] = exact_div(rr[j] * piv - f * rc[j], prev)
            rr[c] = 0
        prev = piv
    return sign * m[size - 1][size - 1]


def dense_det(A):
    """Determinant: Bareiss in exact mode, LU with partial pivoting in float mode."""
    size = len(A)
    if any(len(row) != size for row in A):
        raise ShapeMismatch("determinant of a non-square matrix")
    if size == 0:
        return Fraction(1)
    if _mode(A) != EXACT:
        return _lu_det([[complex(x) for x in row] for row in A])
    if any(isinstance(x, GaussianRational) for row in A for x in row):
        return Fraction(1) * _bareiss([list(row) for row in A], lambda a, b: a / b)
    # clear denominators row by row so the elimination runs on Python ints
    rows, scale = [], 1
    for row in A:
        qs = [Fraction(x) for x in row]
        den = math.lcm(*(q.denominator for q in qs))
        rows.append([q.numerator * (den // q.denominator) for q in qs])
        scale *= den
    return Fraction(_bareiss(rows, lambda a, b: a // b), scale)


def _lu_det(m):
    size = len(m)
    det = 1 + 0j
    for c in range(size):
        r = max(range(c, size), key=lambda i: abs(m[i][c]))
        if m[r][c] == 0:
            return 0j
        if r != c:
            m[c], m[r] = m[r], m[c]
            det = -det
        piv = m[c][c]
        det *= piv
        for i in range(c + 1, size):
            f = m[i][c] / piv
            if f:
                ri, rc = m[i], m[c]
                for j in range(c + 1, size):
                    ri[j] -= f * rc[j]
    return det


def dense_inv(A, zero_tol=1e-12):
    """Gauss-Jordan inverse.

    Exact mode takes the first nonzero pivot; float mode pivots on the
    largest magnitude and treats pivots below ``zero_tol * max|A|`` as zero.
    """
    size = len(A)
    if any(len(row) != size for row in A):
        raise ShapeMismatch("inverse of a non-square matrix")
    mode = _mode(A)
    ident = dense_identity(size, mode)
    m = [list(row) + ident[i] for i, row in enumerate(A)]
    if mode == EXACT:
        tol = None
    else:
        tol = zero_tol * max((abs(x) for row in A for x in row), default=0.0)
    for c in range(size):
        if tol is None:
            r = next((i for i in range(c, size) if m[i][c] != 0), None)
        else:
            r = max(range(c, size), key=lambda i: abs(m[i][c]))
            if abs(m[r][c]) <= tol:
                r = None
        if r is None:
            raise SingularMatrix(f"no pivot in column {c}")
        m[c], m[r] = m[r], m[c]
        pivrow = m[c]
        inv = 1 / pivrow[c]
        for j in range(c, 2 * size):
            pivrow[j] *= inv
        for i in range(size):
            f = m[i][c]
            if i == c or f == 0:
                continue
            row = m[i]
            for j in range(c, 2 * size):
                row[j] -= f * pivrow[j]
    return [row[size:] for row in m]
