"""Exception hierarchy.

Axiom failures are never exceptions; they are reported through
:class:`yblie.report.CheckReport`. Exceptions signal malformed input or a
construction whose universal property cannot be realized.
"""

__all__ = [
    "YBLieError",
    "FieldMismatch",
    "ShapeError",
    "GradingError",
    "NoFactorization",
    "NoCofactorization",
    "Singular",
    "MissingRootOfUnity",
    "NotSymmetricContext",
    "InvalidInput",
    "DescentFailure",
    "NotStrong",
    "SnakeFailure",
    "ParseError",
    "SoundnessError",
]


class YBLieError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(YBLieError):
    pass


class ShapeError(YBLieError, ValueError):
    pass


class GradingError(ShapeError):
    """A matrix entry connects basis vectors of different degree."""


class NoFactorization(YBLieError):
    """``f`` does not factor through the given monomorphism."""


class NoCofactorization(YBLieError):
    """``f`` does not vanish on the kernel of the given epimorphism."""

    def __init__(self, message, kernel_vector=None):
        super().__init__(message)
        self.kernel_vector = kernel_vector


class Singular(YBLieError):
    pass


class MissingRootOfUnity(YBLieError):
    pass


class NotSymmetricContext(YBLieError):
    pass


class InvalidInput(YBLieError):
    """A structure handed to a constructor does not pass its checker."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DescentFailure(YBLieError):
    """A structure map does not restrict to a sub- or quotient object."""


class NotStrong(YBLieError):
    pass


class SnakeFailure(YBLieError):
    pass


class ParseError(YBLieError):
    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class SoundnessError(YBLieError):
    """A construction produced output that fails its own checker (internal error)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
