"""Products and nonnegative powers computed on diagonals only.

Each pair of populated offsets contributes one shifted coordinatewise
product to a single output offset; contributions with the same offset are
summed and offsets beyond ``s`` are dropped because the corresponding
shift power vanishes.  Cost is O(s^2 (n+1)) scalar products.
"""
from __future__ import annotations

from .diagvec import DiagVec, add, star, tau
from .mdmatrix import MDMatrix, check_compatible, identity


def term(p: int, v: DiagVec, q: int, w: DiagVec, k: int):
    """Offset and diagonal of the product of single diagonals ``v@p`` and ``w@q``.

    With ``N`` the upper unit shift, a diagonal at offset ``p >= 0`` is
    ``D(v) N^{pk}`` and one at ``p < 0`` is ``N^{pk} D(v)``.
    """
    if p < 0 and q < 0:
        # N^{-ik} D(v) N^{-jk} D(w) = N^{-(i+j)k} D(tau^{jk} v * w)
        return p + q, star(tau(v, -q * k), w)
    if p < 0:
        i, j = -p, q
        if i <= j:
            return j - i, tau(star(v, w), -i * k)
        return j - i, tau(star(v, w), -j * k)
    if q < 0:
        i, j = p, -q
        if i <= j:
            return i - j, star(tau(v, (j - i) * k), w)
        return i - j, star(v, tau(w, (i - j) * k))
    return p + q, star(v, tau(w, p * k))


def mul(V: MDMatrix, W: MDMatrix) -> MDMatrix:
    check_compatible(V, W)
    s, k = V.s, V.k
    acc = {}
    for p, v in V.diags.items():
        for q, w in W.diags.items():
            if abs(p + q) > s and (p < 0) == (q < 0):
                continue
            off, vec = term(p, v, q, w, k)
            acc[off] = add(acc[off], vec) if off in acc else vec
    return MDMatrix(V.n, k, acc, V.field)


def power(A: MDMatrix, m: int) -> MDMatrix:
    """``A**m`` for ``m >= 0`` by repeated squaring."""
    if m < 0:
        raise ValueError("negative exponent; use multidiag.inverse.pow_signed")
    result = identity(A.n, A.k, A.field)
    base = A
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


pow = power
