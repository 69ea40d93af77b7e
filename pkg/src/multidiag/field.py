"""Scalars: exact (Gaussian) rationals or double precision complex numbers.

Matrix code works on plain Python numbers for speed.  A :class:`Field`
names the mode a matrix lives in and supplies the few operations that
depend on it: coercion, zero testing, parsing and canonical printing.

Exact mode scalars are :class:`fractions.Fraction` when real and
:class:`GaussianRational` otherwise; float mode scalars are ``complex``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, ModeMismatch

EXACT = "exact"
FLOAT = "float"

DEFAULT_ZERO_TOL = 1e-12


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts.

    Instances always have a nonzero imaginary part; arithmetic that lands
    on the real line returns a :class:`~fractions.Fraction` instead, so
    equality of exact scalars is plain representation equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def __bool__(self):
        return True

    def __add__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        return gaussian(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        return gaussian(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        return gaussian(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        a, b = self.re, self.im
        c, d = o
        return gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        return _gauss_div(self.re, self.im, *o)

    def __rtruediv__(self, other):
        o = _as_gauss(other)
        if o is NotImplemented:
            return o
        return _gauss_div(o[0], o[1], self.re, self.im)

    def __pow__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return 1 / (self ** -m)
        result = Fraction(1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result


def _as_gauss(x):
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, (int, Rational)):
        return Fraction(x), Fraction(0)
    return NotImplemented


def _gauss_div(a, b, c, d):
    den = c * c + d * d
    if den == 0:
        raise DivisionByZero("division by exact zero")
    return gaussian((a * c + b * d) / den, (b * c - a * d) / den)


def gaussian(re, im=0):
    """Canonical exact scalar with the given parts."""
    if im == 0:
        return Fraction(re)
    return GaussianRational(re, im)


def mode_of(x) -> str:
    if isinstance(x, (int, Rational, GaussianRational)) and not isinstance(x, bool):
        return EXACT
    if isinstance(x, (float, complex)):
        return FLOAT
    raise TypeError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class Field:
    """Arithmetic mode of a matrix.

    ``zero_tol`` only matters in float mode, where :meth:`is_zero` treats
    ``|x| <= zero_tol * scale`` (or ``zero_tol`` without a scale) as zero.
    """

    mode: str = EXACT
    zero_tol: float = dc_field(default=DEFAULT_ZERO_TOL, compare=False)

    def __post_init__(self):
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0j

    @property
    def one(self):
        return Fraction(1) if self.exact else 1 + 0j

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if self.exact:
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, (int, Rational)):
                return Fraction(x)
            raise ModeMismatch(f"float value {x!r} in exact mode")
        if isinstance(x, GaussianRational):
            return complex(float(x.re), float(x.im))
        return complex(x) + 0j

    def is_zero(self, x, scale=None) -> bool:
        if self.exact:
            return x == 0
        tol = self.zero_tol if scale is None else self.zero_tol * scale
        return abs(x) <= tol

    def div(self, a, b, scale=None):
        if self.is_zero(b, scale):
            raise DivisionByZero(f"division by zero ({format_scalar(b)})")
        return a / b

    def parse(self, text: str):
        re_txt, im_txt = _split_complex(text.strip())
        conv = Fraction if self.exact else float
        try:
            re = conv(re_txt) if re_txt else conv(0)
            im = conv(im_txt) if im_txt is not None else conv(0)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {text!r}: {exc}") from None
        return gaussian(re, im) if self.exact else complex(re, im)

    def format(self, x) -> str:
        return format_scalar(self.coerce(x))


EXACT_FIELD = Field(EXACT)
FLOAT_FIELD = Field(FLOAT)


def field_for(mode: str, zero_tol: float = DEFAULT_ZERO_TOL) -> Field:
    return Field(mode, zero_tol)


def _split_complex(text):
    """Split ``"re+imi"`` into its two parts; ``im`` is None for reals."""
    if not text.endswith("i"):
        return text, None
    body = text[:-1]
    cut = None
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "eE":
            cut = pos
            break
    if cut is None:
        re, im = "", body
    else:
        re, im = body[:cut], body[cut:]
    if im in ("", "+", "-"):
        im += "1"
    return re, im


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_float(x: float) -> str:
    return repr(x + 0.0)


def format_scalar(x) -> str:
    """Canonical text form: ``p/q`` or ``re+imi`` (exact), shortest repr (float)."""
    if isinstance(x, GaussianRational):
        im = _fmt_rational(x.im)
        sign = "" if im.startswith("-") else "+"
        return f"{_fmt_rational(x.re)}{sign}{im}i"
    if isinstance(x, (int, Rational)):
        return _fmt_rational(Fraction(x))
    if isinstance(x, float):
        return _fmt_float(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return _fmt_float(x.real)
        im = _fmt_float(x.imag)
        sign = "" if im.startswith("-") else "+"
        return f"{_fmt_float(x.real)}{sign}{im}i"
    raise TypeError(f"not a scalar: {x!r}")


def _check_modes(a, b):
    if mode_of(a) != mode_of(b):
        raise ModeMismatch(f"cannot combine {mode_of(a)} and {mode_of(b)} scalars")


def add(a, b):
    _check_modes(a, b)
    return a + b


def sub(a, b):
    _check_modes(a, b)
    return a - b


def mul(a, b):
    _check_modes(a, b)
    return a * b


def div(a, b):
    _check_modes(a, b)
    return Field(mode_of(a)).div(a, b)


def is_zero(a, scale=None, zero_tol=DEFAULT_ZERO_TOL) -> bool:
    return Field(mode_of(a), zero_tol).is_zero(a, scale)
