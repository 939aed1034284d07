"""Exception types raised across the package."""


class SymcellError(Exception):
    """Base class for all errors raised by symcell."""


class DimensionMismatch(SymcellError, ValueError):
    pass


class Inconsistent(SymcellError, ValueError):
    """A linear system has no solution."""


class Singular(SymcellError, ValueError):
    """A square matrix has zero determinant in its field."""


class NoIdentity(SymcellError, ValueError):
    pass


class NotCellular(SymcellError, ValueError):
    pass


class DegenerateTrace(SymcellError, ValueError):
    """The trace Gram matrix is singular (or the form is not symmetric)."""


class HigmanFormsDisagree(SymcellError, AssertionError):
    pass


class SchurCrossCheckFailed(SymcellError, AssertionError):
    pass


class NotSemisimple(SymcellError, ValueError):
    pass


class SemisimpleCriteriaDisagree(SymcellError, AssertionError):
    pass


class VerificationFailed(SymcellError, AssertionError):
    """An identity that must hold by construction did not."""


class ParseError(SymcellError, ValueError):
    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ValidationError(SymcellError, ValueError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message} (witness: {witness})")
