"""Determinants and inverses inside the equally spaced class.

Four routes to an inverse live here:

* :func:`inv_thm2` -- closed form for k-tridiagonal matrices with
  ``n + 1 <= 2k``, where every index chain ``j, j+k, ...`` has length <= 2
  and the inverse is again k-tridiagonal;
* :func:`inv_cayley_hamilton` -- ``V^{-1} = -(1/nu_0) sum_{j>=1} nu_j V^{j-1}``
  evaluated with structured products only (exact mode);
* :func:`inv_general` -- permute indices by residue mod k, invert the k
  independent blocks, permute back;
* :func:`multidiag.oracle.dense_inv` for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import mul, power
from .diagvec import DiagVec, padded
from .errors import ModeUnsupported, PreconditionViolated, SingularMatrix
from .field import EXACT_FIELD, Field
from .mdmatrix import MDMatrix, identity, scalar_matrix, trace


@dataclass(frozen=True)
class KTridiagonal:
    """View of a k-tridiagonal matrix ``N^{-k}D(a) + D(b) + D(c)N^k``.

    ``a`` holds the subdiagonal (``A[j+k, j] = a[j]``), ``c`` the
    superdiagonal (``A[j, j+k] = c[j]``); both are zero past ``n - k``.
    """

    n: int
    k: int
    a: DiagVec
    b: DiagVec
    c: DiagVec
    field: Field = EXACT_FIELD

    @classmethod
    def from_lists(cls, a: Sequence, b: Sequence, c: Sequence, k: int, field: Field = EXACT_FIELD):
        n = len(b) - 1
        return cls.from_matrix(
            MDMatrix(n, k, {-1: padded(a, n, field), 0: padded(b, n, field), 1: padded(c, n, field)}, field)
        )

    @classmethod
    def from_matrix(cls, A: MDMatrix) -> "KTridiagonal":
        if not A.is_k_tridiagonal():
            raise PreconditionViolated(f"offsets {A.offsets} are not within -1..1")
        return cls(A.n, A.k, A.diag(-1), A.diag(0), A.diag(1), A.field)

    def to_matrix(self) -> MDMatrix:
        return MDMatrix(self.n, self.k, {-1: self.a, 0: self.b, 1: self.c}, self.field)

    @property
    def thm2_regime(self) -> bool:
        return self.n + 1 <= 2 * self.k


def _as_ktri(A) -> KTridiagonal:
    return A if isinstance(A, KTridiagonal) else KTridiagonal.from_matrix(A)


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of ``Det(V - lambda E)``, ascending in lambda."""

    coeffs: tuple

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class NonsingularityCheck:
    nonsingular: bool
    witness: str | None = None
    kind: str | None = None  # "middle" (b_j = 0) or "pair" (b_j b_{j+k} - a_j c_j = 0)
    index: int | None = None

    def __bool__(self):
        return self.nonsingular


# --- determinants ----------------------------------------------------------


def det_k_tridiagonal(A):
    """Determinant of a k-tridiagonal matrix without divisions.

    The matrix splits into k interleaved ordinary tridiagonal chains
    ``r, r+k, r+2k, ...``; each chain's determinant is the continuant
    ``g_m = b g_{m-1} - a c g_{m-2}`` and the result is their product.
    """
    T = _as_ktri(A)
    a, b, c, n, k = T.a.coords, T.b.coords, T.c.coords, T.n, T.k
    det = T.field.one
    for r in range(k):
        g_prev, g = T.field.one, b[r]
        j = r
        while j + k <= n:
            g_prev, g = g, b[j + k] * g - a[j] * c[j] * g_prev
            j += k
        det *= g
    return det


def det_pivot_product(A):
    """Determinant as ``prod f_j`` with ``f_j = b_j - a_{j-k} c_{j-k} / f_{j-k}``.

    Raises :class:`DivisionByZero` when some needed ``f_{j-k}`` vanishes;
    :func:`det_k_tridiagonal` has no such restriction.
    """
    T = _as_ktri(A)
    a, b, c, n, k = T.a.coords, T.b.coords, T.c.coords, T.n, T.k
    f = list(b[:k])
    for j in range(k, n + 1):
        f.append(b[j] - T.field.div(a[j - k] * c[j - k], f[j - k]))
    det = T.field.one
    for x in f:
        det *= x
    return det


# --- closed form for n + 1 <= 2k -------------------------------------------


def _require_thm2(T: KTridiagonal):
    if not T.thm2_regime:
        raise PreconditionViolated(f"closed form needs n+1 <= 2k, got n={T.n}, k={T.k}")


def is_nonsingular_thm2(A) -> NonsingularityCheck:
    """Nonsingularity test for ``n + 1 <= 2k``; reports the first failed condition.

    Conditions: ``b_j != 0`` for ``j = n+1-k .. k-1`` (unpaired indices, empty
    when ``n + 1 = 2k``) and ``b_j b_{j+k} - a_j c_j != 0`` for ``j = 0..n-k``.
    """
    T = _as_ktri(A)
    _require_thm2(T)
    a, b, c, n, k, F = T.a, T.b, T.c, T.n, T.k, T.field
    bscale = None
    if not F.exact:
        bscale = max(abs(x) for x in b) or None
    for j in range(n + 1 - k, k):
        if F.is_zero(b[j], bscale):
            return NonsingularityCheck(False, f"b_{j} = 0", "middle", j)
    for j in range(n - k + 1):
        d = b[j] * b[j + k] - a[j] * c[j]
        scale = None if F.exact else (abs(b[j] * b[j + k]) + abs(a[j] * c[j])) or None
        if F.is_zero(d, scale):
            return NonsingularityCheck(False, f"b_{j} b_{j + k} - a_{j} c_{j} = 0", "pair", j)
    return NonsingularityCheck(True)


def inv_thm2(A) -> MDMatrix:
    """Closed-form inverse ``N^{-k}D(x) + D(y) + D(z)N^k`` of a k-tridiagonal matrix."""
    T = _as_ktri(A)
    _require_thm2(T)
    check = is_nonsingular_thm2(T)
    if not check:
        raise SingularMatrix(witness=check.witness)
    a, b, c, n, k, F = T.a, T.b, T.c, T.n, T.k, T.field
    x = [F.zero] * (n + 1)
    y = [F.zero] * (n + 1)
    z = [F.zero] * (n + 1)
    for j in range(n - k + 1):
        d = b[j] * b[j + k] - a[j] * c[j]
        x[j] = -a[j] / d
        z[j] = -c[j] / d
        y[j] = b[j + k] / d
        y[j + k] = b[j] / d
    for j in range(n + 1 - k, k):
        y[j] = F.one / b[j]
    return MDMatrix(n, k, {-1: DiagVec(tuple(x), F), 0: DiagVec(tuple(y), F), 1: DiagVec(tuple(z), F)}, F)


# --- Cayley-Hamilton -------------------------------------------------------


def char_poly(V: MDMatrix) -> CharPoly:
    """Faddeev-LeVerrier with structured products; exact mode only."""
    if not V.field.exact:
        raise ModeUnsupported("characteristic polynomial needs exact arithmetic")
    size = V.n + 1
    E = identity(V.n, V.k, V.field)
    # det(lambda E - V) = lambda^size + c_1 lambda^{size-1} + ... + c_size
    c = [V.field.one]
    M = V
    for m in range(1, size + 1):
        if m > 1:
            M = mul(V, M + E.scale(c[m - 1]))
        c.append(-trace(M) / m)
    sign = -1 if size % 2 else 1
    return CharPoly(tuple(sign * c[size - j] for j in range(size + 1)))


def poly_at(V: MDMatrix, coeffs: Sequence, intermediates: list | None = None) -> MDMatrix:
    """``sum_j coeffs[j] V^j`` by Horner's rule over structured products."""
    P = scalar_matrix(coeffs[-1], V.n, V.k, V.field)
    for nu in reversed(coeffs[:-1]):
        P = mul(P, V) + scalar_matrix(nu, V.n, V.k, V.field)
        if intermediates is not None:
            intermediates.append(P)
    return P


def inv_cayley_hamilton(V: MDMatrix, intermediates: list | None = None) -> MDMatrix:
    """Inverse as a polynomial in ``V``; every intermediate is itself an MDMatrix.

    Pass a list as ``intermediates`` to collect the Horner partial sums.
    """
    cp = char_poly(V)
    nu0 = cp[0]
    if nu0 == 0:
        raise SingularMatrix(witness="Det = 0")
    P = poly_at(V, cp.coeffs[1:], intermediates)
    return P.scale(-1 / nu0)


# --- residue-block inverse -------------------------------------------------


def residue_blocks(A: MDMatrix):
    """The k dense blocks ``B_r[a][b] = A[r + a k, r + b k]``, r = 0..k-1."""
    n, k = A.n, A.k
    blocks = []
    for r in range(k):
        m = (n - r) // k + 1
        B = [[A.field.zero] * m for _ in range(m)]
        for p, v in A.diags.items():
            for t in range(m - abs(p)):
                if p >= 0:
                    B[t][t + p] = v.coords[r + t * k]
                else:
                    B[t - p][t] = v.coords[r + t * k]
        blocks.append(B)
    return blocks


def _invert_block(B, F: Field, r: int):
    m = len(B)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(m)] for i, row in enumerate(B)]
    tol = None
    if not F.exact:
        tol = F.zero_tol * (max((abs(x) for row in B for x in row), default=0.0) or 1.0)
    for col in range(m):
        if F.exact:
            piv = next((i for i in range(col, m) if aug[i][col] != 0), None)
        else:
            piv = max(range(col, m), key=lambda i: abs(aug[i][col]))
            if abs(aug[piv][col]) <= tol:
                piv = None
        if piv is None:
            raise SingularMatrix(witness=f"residue block {r} has no pivot in column {col}")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = F.one / prow[col]
        prow[col:] = [x * inv for x in prow[col:]]
        for i in range(m):
            f = aug[i][col]
            if i != col and f != 0:
                row = aug[i]
                for j in range(col, 2 * m):
                    row[j] -= f * prow[j]
    return [row[m:] for row in aug]


def inv_general(V: MDMatrix) -> MDMatrix:
    """Inverse by residue interleaving.

    Grouping indices by residue mod k turns V into k independent blocks whose
    entries come from consecutive coordinates of each diagonal; their inverses
    are scattered back onto the same lattice, so the result is in the class
    by construction.
    """
    n, k, F = V.n, V.k, V.field
    s = V.s
    out = {p: [F.zero] * (n + 1) for p in range(-s, s + 1)}
    for r, B in enumerate(residue_blocks(V)):
        Binv = _invert_block(B, F, r)
        for i, row in enumerate(Binv):
            for j, x in enumerate(row):
                out[j - i][r + min(i, j) * k] = x
    return MDMatrix(n, k, {p: DiagVec(tuple(v), F) for p, v in out.items()}, F)


def det_general(V: MDMatrix):
    """Determinant of any member: product of the residue block determinants."""
    from .oracle import dense_det

    det = V.field.one
    for B in residue_blocks(V):
        det *= dense_det(B)
    return V.field.coerce(det)


def pow_signed(A: MDMatrix, m: int) -> MDMatrix:
    if m >= 0:
        return power(A, m)
    return power(inv_general(A), -m)


def describe_singular(A: MDMatrix) -> str | None:
    """Closed-form witness when ``A`` is k-tridiagonal in the n+1 <= 2k regime."""
    if A.is_k_tridiagonal() and A.n + 1 <= 2 * A.k:
        check = is_nonsingular_thm2(A)
        return check.witness
    return None

