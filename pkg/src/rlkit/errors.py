"""Exception hierarchy shared by every rlkit module."""

from __future__ import annotations


class RLError(Exception):
    """Base class. ``witness`` holds the offending elements, if any."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class ValidationError(RLError, ValueError):
    """Raised when raw tables do not describe a residuated lattice."""


class NotALattice(ValidationError):
    pass


class NotMonoid(ValidationError):
    pass


class ResiduationFails(ValidationError):
    pass


class ResiduumMissing(ValidationError):
    pass


class ImpMismatch(ValidationError):
    pass


class ElementError(RLError, IndexError):
    pass


class EmptyGenerator(RLError, ValueError):
    pass


class AlgebraMismatch(RLError, ValueError):
    pass


class ImproperFilter(RLError, ValueError):
    pass


class InputNotPseudoIrreducible(RLError, ValueError):
    pass


class NotAboveKernel(RLError, ValueError):
    pass


class CompatibilityFailure(RLError):
    """A relation expected to be a congruence is not one. Indicates a bug."""


class NotClosedSystem(RLError, ValueError):
    pass


class PreconditionBooleanSplit(RLError, ValueError):
    pass


class NotComaximal(RLError, ValueError):
    pass


class NotNested(RLError, ValueError):
    pass


class OrderCapExceeded(RLError, ValueError):
    pass


class UnknownPredicate(RLError, ValueError):
    pass


class ParseError(RLError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(loc + message)
        self.line = line
        self.column = column


class TheoremViolation(RLError, AssertionError):
    """A statement that must hold in every residuated lattice failed."""
