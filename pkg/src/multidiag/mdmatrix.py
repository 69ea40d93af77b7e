"""Matrices with equally spaced diagonals, stored by diagonal.

An :class:`MDMatrix` of size (n+1)x(n+1) and spacing k keeps one
:class:`DiagVec` per populated offset ``p`` in ``-s..s`` (``s = n // k``).
Both super- and subdiagonals are indexed by the smaller of the row and
column index::

    p >= 0:  A[i, i + p*k] = diags[p][i]
    p <  0:  A[j + |p|*k, j] = diags[p][j]

which is exactly ``sum_p N^{-|p|k} D(v_p) + D(v_0) + sum_p D(v_p) N^{pk}``
with N the unit upper shift.  Coordinates past ``n - |p|*k`` are zero.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Mapping

from .diagvec import DiagVec, add as vadd, ones
from .errors import (
    ModeMismatch,
    OffLatticeNonzero,
    PreconditionViolated,
    ShapeMismatch,
    TrailingNonzero,
)
from .field import EXACT, EXACT_FIELD, Field, format_scalar

Dense = list  # list of rows, each a list of scalars


@dataclass(frozen=True, eq=False)
class MDMatrix:
    n: int
    k: int
    diags: Mapping[int, DiagVec] = dc_field(default_factory=dict)
    field: Field = EXACT_FIELD

    def __post_init__(self):
        n, k = self.n, self.k
        if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
            raise PreconditionViolated(f"need 1 <= k <= n, got n={n}, k={k}")
        s = n // k
        clean = {}
        for p, vec in self.diags.items():
            p = int(p)
            if abs(p) > s:
                raise PreconditionViolated(f"offset {p} outside -{s}..{s}")
            if not isinstance(vec, DiagVec):
                vec = DiagVec.of(vec, self.field)
            elif vec.field.mode != self.field.mode:
                raise ModeMismatch(f"diagonal {p} is {vec.field.mode}, matrix is {self.field.mode}")
            if len(vec) != n + 1:
                raise ShapeMismatch(f"diagonal {p} has {len(vec)} coordinates, expected {n + 1}")
            last = n - abs(p) * k
            tail = vec.coords[last + 1:]
            for j, x in enumerate(tail, start=last + 1):
                if not self.field.is_zero(x):
                    raise TrailingNonzero(f"diagonal {p} coordinate {j} = {format_scalar(x)} must be zero")
            if any(x != 0 for x in tail):
                vec = DiagVec(vec.coords[: last + 1] + (self.field.zero,) * len(tail), self.field)
            if not vec.is_zero():
                clean[p] = vec
        object.__setattr__(self, "diags", dict(sorted(clean.items())))

    @property
    def s(self) -> int:
        return self.n // self.k

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def offsets(self):
        return tuple(self.diags)

    def diag(self, p: int) -> DiagVec:
        """Diagonal at offset ``p`` (units of k); zero vector when absent."""
        if p in self.diags:
            return self.diags[p]
        return DiagVec((self.field.zero,) * (self.n + 1), self.field)

    def __eq__(self, other):
        if not isinstance(other, MDMatrix):
            return NotImplemented
        return (
            (self.n, self.k, self.field.mode) == (other.n, other.k, other.field.mode)
            and self.diags == other.diags
        )

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{p}: {v}" for p, v in self.diags.items())
        return f"MDMatrix(n={self.n}, k={self.k}, mode={self.field.mode}, {{{body}}})"

    def __add__(self, other: "MDMatrix") -> "MDMatrix":
        return add(self, other)

    def __sub__(self, other: "MDMatrix") -> "MDMatrix":
        return add(self, other.scale(-self.field.one))

    def __matmul__(self, other: "MDMatrix") -> "MDMatrix":
        from .algebra import mul

        return mul(self, other)

    def scale(self, c) -> "MDMatrix":
        return MDMatrix(self.n, self.k, {p: v.scale(c) for p, v in self.diags.items()}, self.field)

    def is_k_tridiagonal(self) -> bool:
        return all(abs(p) <= 1 for p in self.diags)


def check_compatible(a: MDMatrix, b: MDMatrix):
    if (a.n, a.k) != (b.n, b.k):
        raise ShapeMismatch(f"(n, k) = {(a.n, a.k)} vs {(b.n, b.k)}")
    if a.field.mode != b.field.mode:
        raise ModeMismatch(f"{a.field.mode} vs {b.field.mode}")


def add(a: MDMatrix, b: MDMatrix) -> MDMatrix:
    check_compatible(a, b)
    diags = dict(a.diags)
    for p, w in b.diags.items():
        diags[p] = vadd(diags[p], w) if p in diags else w
    return MDMatrix(a.n, a.k, diags, a.field)


def identity(n: int, k: int, field: Field = EXACT_FIELD) -> MDMatrix:
    return MDMatrix(n, k, {0: ones(n, field)}, field)


def zero(n: int, k: int, field: Field = EXACT_FIELD) -> MDMatrix:
    return MDMatrix(n, k, {}, field)


def scalar_matrix(c, n: int, k: int, field: Field = EXACT_FIELD) -> MDMatrix:
    return MDMatrix(n, k, {0: ones(n, field).scale(field.coerce(c))}, field)


def convert(A: MDMatrix, field: Field) -> MDMatrix:
    """Same matrix over another field; exact to float is the only lossy direction allowed."""
    if A.field.mode == field.mode:
        return MDMatrix(A.n, A.k, A.diags, field)
    diags = {p: DiagVec(tuple(field.coerce(x) for x in v.coords), field) for p, v in A.diags.items()}
    return MDMatrix(A.n, A.k, diags, field)


def entry(A: MDMatrix, i: int, j: int):
    if not (0 <= i <= A.n and 0 <= j <= A.n):
        raise IndexError(f"({i}, {j}) outside 0..{A.n}")
    d = j - i
    if d % A.k:
        return A.field.zero
    p = d // A.k
    if p not in A.diags:
        return A.field.zero
    return A.diags[p][min(i, j)]


def trace(A: MDMatrix):
    return sum(A.diag(0).coords, A.field.zero)


def to_dense(A: MDMatrix) -> Dense:
    size, k = A.n + 1, A.k
    rows = [[A.field.zero] * size for _ in range(size)]
    for p, vec in A.diags.items():
        step = abs(p) * k
        for t in range(size - step):
            if p >= 0:
                rows[t][t + step] = vec.coords[t]
            else:
                rows[t + step][t] = vec.coords[t]
    return rows


def from_dense(M, k: int, field: Field = EXACT_FIELD) -> MDMatrix:
    """Extract the diagonals at multiples of ``k`` from a square matrix.

    Every other entry must be zero (per ``field.is_zero``; in float mode the
    test is relative to the largest entry), else :class:`OffLatticeNonzero`.
    """
    size = len(M)
    if size < 2 or any(len(row) != size for row in M):
        raise ShapeMismatch("matrix must be square with at least 2 rows")
    n = size - 1
    if not 1 <= k <= n:
        raise PreconditionViolated(f"need 1 <= k <= n, got n={n}, k={k}")
    rows = [[field.coerce(x) for x in row] for row in M]
    scale = None
    if not field.exact:
        scale = max((abs(x) for row in rows for x in row), default=0.0) or None
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if (j - i) % k and not field.is_zero(x, scale):
                raise OffLatticeNonzero(i, j, format_scalar(x))
    s = n // k
    diags = {}
    for p in range(-s, s + 1):
        step = abs(p) * k
        coords = [field.zero] * size
        for t in range(size - step):
            coords[t] = rows[t][t + step] if p >= 0 else rows[t + step][t]
        diags[p] = DiagVec(tuple(coords), field)
    return MDMatrix(n, k, diags, field)


def lattice_violations(M, k: int):
    """Positions (i, j) of exactly nonzero entries off the MD lattice."""
    return [
        (i, j)
        for i, row in enumerate(M)
        for j, x in enumerate(row)
        if (j - i) % k and x != 0
    ]


# --- canonical JSON --------------------------------------------------------


def to_json_dict(A: MDMatrix) -> dict:
    return {
        "n": A.n,
        "k": A.k,
        "mode": A.field.mode,
        "diagonals": {str(p): [format_scalar(x) for x in v.coords] for p, v in A.diags.items()},
    }


def dumps(A: MDMatrix) -> str:
    return json.dumps(to_json_dict(A), sort_keys=True, indent=2) + "\n"


def from_json_dict(data: dict, field: Field | None = None) -> MDMatrix:
    """Build a matrix from the canonical JSON layout.

    Raises ``ValueError`` (or a subclass) on any structural problem.
    """
    try:
        n, k = data["n"], data["k"]
        mode = data.get("mode", EXACT)
        raw = data.get("diagonals", {})
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed matrix document: {exc}") from None
    if not isinstance(n, int) or not isinstance(k, int) or not isinstance(raw, dict):
        raise ValueError("n and k must be integers and diagonals an object")
    if field is None:
        field = Field(mode)
    elif field.mode != mode:
        raise ModeMismatch(f"document is {mode}, requested {field.mode}")
    diags = {}
    for key, values in raw.items():
        try:
            p = int(key)
        except ValueError:
            raise ValueError(f"offset {key!r} is not an integer") from None
        if not isinstance(values, list):
            raise ValueError(f"diagonal {key} must be a list")
        if len(values) != n + 1:
            raise ShapeMismatch(f"diagonal {key} has {len(values)} entries, expected {n + 1}")
        diags[p] = DiagVec(tuple(field.parse(v) if isinstance(v, str) else field.coerce(v) for v in values), field)
    return MDMatrix(n, k, diags, field)


def loads(text: str, field: Field | None = None) -> MDMatrix:
    return from_json_dict(json.loads(text), field)


def read(path, field: Field | None = None) -> MDMatrix:
    return loads(Path(path).read_text(), field)


def write(A: MDMatrix, path):
    Path(path).write_text(dumps(A))
