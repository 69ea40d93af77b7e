"""Exception hierarchy shared by every module of the package."""


class MultidiagError(Exception):
    """Base class for all errors raised by :mod:`multidiag`."""


class DivisionByZero(MultidiagError, ZeroDivisionError):
    pass


class ModeMismatch(MultidiagError, TypeError):
    pass


class ShapeMismatch(MultidiagError, ValueError):
    pass


class OffLatticeNonzero(MultidiagError, ValueError):
    """A dense matrix has a nonzero entry outside the equally spaced diagonals."""

    def __init__(self, i, j, value=None):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"nonzero entry {value!r} at ({i}, {j}) is off the lattice")


class TrailingNonzero(MultidiagError, ValueError):
    pass


class SingularMatrix(MultidiagError, ArithmeticError):
    def __init__(self, message="matrix is singular", witness=None):
        self.witness = witness
        if witness:
            message = f"{message}: {witness}"
        super().__init__(message)


class PreconditionViolated(MultidiagError, ValueError):
    pass


class ModeUnsupported(MultidiagError, ValueError):
    pass
