"""Exact verification of YB-Lie algebras, coalgebras, braided bialgebras and their dualities."""

from . import errors as _errors
from .errors import *  # noqa: F401,F403
from .linalg import GAUSSIAN_RATIONALS, RATIONALS, Field, Matrix, prime_field
from .monoidal import UNIT, CategoryContext, ExactMorphism, GradedObject, braiding, tensor
from .report import AxiomResult, CheckReport, Witness

__version__ = "0.1.0"

__all__ = [
    *_errors.__all__,
    "GAUSSIAN_RATIONALS",
    "RATIONALS",
    "Field",
    "Matrix",
    "prime_field",
    "UNIT",
    "CategoryContext",
    "ExactMorphism",
    "GradedObject",
    "braiding",
    "tensor",
    "AxiomResult",
    "CheckReport",
    "Witness",
    "__version__",
]
