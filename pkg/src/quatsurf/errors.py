"""Exception types shared across the package.

Every error carries a short ``code`` slug used in structured error records
(CLI stderr, service error bodies).
"""


class Error(Exception):
    """Base class for all package errors."""

    code = "error"

    def record(self):
        return {"error": {"code": self.code, "message": str(self)}}


class ParseError(Error):
    """Malformed input text; carries the offending position when known."""

    code = "parse-error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(ParseError):
    code = "unknown-variable"


class DomainError(Error):
    """The operation is mathematically undefined for the given input."""

    code = "domain-error"


class AlgebraMismatchError(DomainError):
    code = "algebra-mismatch"


class ZeroNormError(DomainError):
    code = "zero-norm"


class NotInvertibleError(DomainError):
    code = "not-invertible"


class PointSearchError(DomainError):
    """Point search requested on a conic with no rational points."""

    code = "no-rational-points"


class FactorizationBudgetError(DomainError):
    code = "factorization-budget"


class PrecisionBudgetError(DomainError):
    code = "precision-budget"


class UnverifiedIrreducibilityWarning(UserWarning):
    """Irreducibility was assumed, not checked (degree above the test range)."""
