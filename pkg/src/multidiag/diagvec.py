"""Diagonal vectors and the shift calculus used to multiply them.

A :class:`DiagVec` has n+1 coordinates indexed 0..n.  Reads outside that
range are zero, which is the only thing :func:`tau` relies on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ModeMismatch, ShapeMismatch
from .field import EXACT_FIELD, Field, format_scalar


@dataclass(frozen=True)
class DiagVec:
    coords: tuple
    field: Field = EXACT_FIELD

    @classmethod
    def of(cls, values: Iterable, field: Field = EXACT_FIELD) -> "DiagVec":
        return cls(tuple(field.coerce(v) for v in values), field)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, j: int):
        """Coordinate ``j``, zero when ``j`` is outside ``0..n``."""
        if 0 <= j < len(self.coords):
            return self.coords[j]
        return self.field.zero

    def __add__(self, other: "DiagVec") -> "DiagVec":
        return add(self, other)

    def __mul__(self, other: "DiagVec") -> "DiagVec":
        return star(self, other)

    def __neg__(self) -> "DiagVec":
        return DiagVec(tuple(-x for x in self.coords), self.field)

    def scale(self, c) -> "DiagVec":
        return DiagVec(tuple(c * x for x in self.coords), self.field)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def last_nonzero(self) -> int:
        """Index of the last exactly nonzero coordinate, -1 if none."""
        for j in range(len(self.coords) - 1, -1, -1):
            if self.coords[j] != 0:
                return j
        return -1

    def __str__(self):
        return "(" + ", ".join(format_scalar(x) for x in self.coords) + ")"


def _same_shape(v: DiagVec, w: DiagVec):
    if len(v) != len(w):
        raise ShapeMismatch(f"length {len(v)} vs {len(w)}")
    if v.field.mode != w.field.mode:
        raise ModeMismatch(f"{v.field.mode} vs {w.field.mode}")


def tau(v: DiagVec, i: int = 1) -> DiagVec:
    """Shift subscripts up by ``i``: ``result[j] = v[j + i]``, zero-filled."""
    size = len(v.coords)
    if i == 0:
        return v
    zero = v.field.zero
    if abs(i) >= size:
        return DiagVec((zero,) * size, v.field)
    if i > 0:
        return DiagVec(v.coords[i:] + (zero,) * i, v.field)
    return DiagVec((zero,) * -i + v.coords[:i], v.field)


def star(v: DiagVec, w: DiagVec) -> DiagVec:
    """Coordinatewise product."""
    _same_shape(v, w)
    return DiagVec(tuple(a * b for a, b in zip(v.coords, w.coords)), v.field)


def add(v: DiagVec, w: DiagVec) -> DiagVec:
    _same_shape(v, w)
    return DiagVec(tuple(a + b for a, b in zip(v.coords, w.coords)), v.field)


def ones(n: int, field: Field = EXACT_FIELD) -> DiagVec:
    return DiagVec((field.one,) * (n + 1), field)


def zeros(n: int, field: Field = EXACT_FIELD) -> DiagVec:
    return DiagVec((field.zero,) * (n + 1), field)


def padded(values: Sequence, n: int, field: Field = EXACT_FIELD) -> DiagVec:
    """Extend a short diagonal with trailing zeros to length n+1."""
    if len(values) > n + 1:
        raise ShapeMismatch(f"{len(values)} coordinates do not fit length {n + 1}")
    coords = tuple(field.coerce(x) for x in values)
    return DiagVec(coords + (field.zero,) * (n + 1 - len(coords)), field)
