"""Exception types raised across the package."""
from __future__ import annotations

from .groebner import InvariantViolation
from .polynomial import ParseError, StructuralError


class PreconditionError(ValueError):
    """An operation was called on inputs outside its domain (e.g. B not inside A)."""


class UnsupportedInputError(ValueError):
    pass


class FittingError(RuntimeError):
    """Sampled values did not settle into a polynomial inside the sampled range."""


class GenerationFailure(RuntimeError):
    def __init__(self, message: str, transcript=()):
        super().__init__(message)
        self.transcript = list(transcript)


__all__ = [
    "FittingError",
    "GenerationFailure",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "StructuralError",
    "UnsupportedInputError",
]
