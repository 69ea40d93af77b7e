"""Random members of the class, for tests and experiment scripts."""
from __future__ import annotations

import random
from fractions import Fraction

from .diagvec import DiagVec
from .field import EXACT_FIELD, FLOAT_FIELD, Field
from .mdmatrix import MDMatrix, to_dense
from .oracle import dense_det

NONZERO = [d for d in range(-5, 6) if d]


def rational(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    """Numerator in [lo, hi], nonzero denominator in [-5, 5]."""
    return Fraction(rng.randint(lo, hi), rng.choice(NONZERO))


def _diag(rng, n, k, p, draw, field, density):
    last = n - abs(p) * k
    coords = [draw() if t <= last and rng.random() < density else field.zero for t in range(n + 1)]
    return DiagVec(tuple(field.coerce(x) for x in coords), field)


def random_md(rng: random.Random, n: int, k: int, field: Field = EXACT_FIELD,
              density: float = 1.0, offsets=None) -> MDMatrix:
    s = n // k
    draw = (lambda: rational(rng)) if field.exact else (lambda: rng.uniform(-1, 1))
    offsets = range(-s, s + 1) if offsets is None else offsets
    return MDMatrix(n, k, {p: _diag(rng, n, k, p, draw, field, density) for p in offsets}, field)


def random_ktri(rng: random.Random, n: int, k: int, field: Field = EXACT_FIELD,
                density: float = 1.0) -> MDMatrix:
    return random_md(rng, n, k, field, density, offsets=(-1, 0, 1))


def plant_zero_pivots(rng: random.Random, A: MDMatrix) -> MDMatrix:
    """Force some ``f_j = 0`` in ``f_j = b_j - a_{j-k} c_{j-k} / f_{j-k}``.

    Leading entries ``b_0..b_{k-1}`` are zeroed at random and later ``b_j``
    are chosen to cancel the running pivot, so the quotient recursion breaks
    while the determinant stays well defined.
    """
    n, k = A.n, A.k
    a, b, c = A.diag(-1).coords, list(A.diag(0).coords), A.diag(1).coords
    f = []
    for j in range(n + 1):
        if j < k:
            if rng.random() < 0.5:
                b[j] = Fraction(0)
            f.append(b[j])
            continue
        prev = f[j - k]
        if prev == 0:
            f.append(None)
            continue
        if prev is not None and rng.random() < 0.3:
            b[j] = a[j - k] * c[j - k] / prev
        f.append(None if prev is None else b[j] - a[j - k] * c[j - k] / prev)
    return MDMatrix(n, k, {-1: A.diag(-1), 0: DiagVec(tuple(b), A.field), 1: A.diag(1)}, A.field)


def random_nonsingular(rng: random.Random, n: int, k: int, *, ktri: bool = False,
                       density: float = 1.0, tries: int = 100) -> MDMatrix:
    for _ in range(tries):
        A = random_ktri(rng, n, k, density=density) if ktri else random_md(rng, n, k, density=density)
        if dense_det(to_dense(A)) != 0:
            return A
    raise RuntimeError(f"no nonsingular sample for n={n}, k={k}")


def dominant_ktri(rng: random.Random, n: int, k: int, field: Field = FLOAT_FIELD) -> MDMatrix:
    """Float k-tridiagonal matrix, main diagonal U[1,2] scaled to dominate its row."""
    a = [rng.uniform(-1, 1) if j <= n - k else 0.0 for j in range(n + 1)]
    c = [rng.uniform(-1, 1) if j <= n - k else 0.0 for j in range(n + 1)]
    b = [rng.choice((-1, 1)) * rng.uniform(1, 2) * 3 for _ in range(n + 1)]
    return MDMatrix(n, k, {-1: a, 0: b, 1: c}, field)


def dominant_md(rng: random.Random, n: int, k: int, field: Field = FLOAT_FIELD) -> MDMatrix:
    """Float member with every diagonal populated and a dominant main diagonal."""
    s = n // k
    diags = {p: [rng.uniform(-1, 1) if j <= n - abs(p) * k else 0.0 for j in range(n + 1)]
             for p in range(-s, s + 1) if p}
    diags[0] = [rng.choice((-1, 1)) * rng.uniform(1, 2) * (2 * s + 1) for _ in range(n + 1)]
    return MDMatrix(n, k, diags, field)
