"""Structured linear algebra for matrices with equally spaced diagonals."""
from .algebra import mul, power
from .diagvec import DiagVec, ones, star, tau
from .errors import (
    DivisionByZero,
    ModeMismatch,
    ModeUnsupported,
    MultidiagError,
    OffLatticeNonzero,
    PreconditionViolated,
    ShapeMismatch,
    SingularMatrix,
    TrailingNonzero,
)
from .field import EXACT_FIELD, FLOAT_FIELD, Field, GaussianRational, format_scalar
from .inverse import (
    CharPoly,
    KTridiagonal,
    char_poly,
    det_general,
    det_k_tridiagonal,
    det_pivot_product,
    inv_cayley_hamilton,
    inv_general,
    inv_thm2,
    is_nonsingular_thm2,
    pow_signed,
)
from .mdmatrix import MDMatrix, entry, from_dense, identity, to_dense, trace, zero

__version__ = "0.1.0"
