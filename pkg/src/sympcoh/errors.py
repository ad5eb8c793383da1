"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input problems (files, grammar,
model text) exit 1, mathematical validation failures (Jacobi identity,
degenerate or non-closed omega) exit 2, and internal-inconsistency
errors (a proved theorem failing to check out numerically, which can
only mean an implementation bug) exit 3.
"""

from __future__ import annotations

__all__ = [
    "SympcohError",
    "InputError",
    "ParseError",
    "IndexOutOfRange",
    "EntryCountMismatch",
    "ModelFileError",
    "MathValidationError",
    "JacobiViolation",
    "OddDimension",
    "NotClosed",
    "Degenerate",
    "NotUnimodular",
    "InternalInconsistencyError",
    "AmbientMismatch",
    "NotSubspace",
    "NotInSubspace",
    "DimMismatch",
    "MixedDegree",
]


class SympcohError(Exception):
    """Base class for every error raised by this package."""


class InputError(SympcohError):
    """Malformed user input: model files, grammar text, CLI arguments."""


class ParseError(InputError):
    """Syntax error in structure-equation or form text."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class IndexOutOfRange(ParseError):
    """A basis index outside 1..dim appeared in parsed text."""


class EntryCountMismatch(ParseError):
    """Number of structure-equation entries disagrees with the stated dimension."""


class ModelFileError(InputError):
    """Malformed key = value model file."""


class MathValidationError(SympcohError):
    """Input is syntactically fine but mathematically invalid."""


class JacobiViolation(MathValidationError):
    """d^2 != 0; the structure equations do not define a Lie algebra."""

    def __init__(self, degree: int, witness: tuple[int, ...], detail: str = ""):
        self.degree = degree
        self.witness = witness
        msg = f"d^2 != 0 on degree {degree}, witness monomial e{''.join(map(str, witness))}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class OddDimension(MathValidationError):
    """Symplectic structures need an even-dimensional algebra."""


class NotClosed(MathValidationError):
    """The candidate symplectic form is not d-closed."""


class Degenerate(MathValidationError):
    """The candidate symplectic form has vanishing top power."""


class NotUnimodular(MathValidationError):
    """Operation requires a unimodular algebra (trace ad = 0)."""


class InternalInconsistencyError(SympcohError):
    """A theorem-backed consistency check failed: implementation bug, not math."""


class AmbientMismatch(SympcohError, ValueError):
    """Subspaces of different ambient dimensions were combined."""


class NotSubspace(SympcohError, ValueError):
    """Quotient requested by a space that is not contained in the total space."""


class NotInSubspace(SympcohError, ValueError):
    """A vector outside the expected span was handed to a coordinate map."""


class DimMismatch(SympcohError, ValueError):
    """Forms living over different ambient dimensions were combined."""


class MixedDegree(SympcohError, ValueError):
    """Nonzero forms of different degrees were silently mixed."""
