"""
Error types
Every failure raised by the calculus packages derives from OmegaCalcError
"""
from typing import Iterable, Optional


class OmegaCalcError(Exception):
    """Base class for all library errors"""

    tag = "error"


class DomainError(OmegaCalcError):
    """A point lies outside the domain of an operator's point map"""

    tag = "domain_error"


class InvalidOperator(OmegaCalcError, ValueError):
    """Operator parameters violate a construction invariant"""

    tag = "invalid_operator"


class IncompatibleOperators(OmegaCalcError):
    """Two operators have no closed-form composite"""

    tag = "incompatible_operators"


class ParseError(OmegaCalcError):
    """Expression text could not be parsed"""

    tag = "parse_error"

    def __init__(self, message: str, offset: int, expected: Optional[Iterable[str]] = None):
        """
        Initialize a parse error

        Args:
            message: Human readable description
            offset: Byte offset into the source text where parsing failed
            expected: Tokens that would have been accepted at the offset
        """
        self.offset = offset
        self.expected = tuple(sorted(expected or ()))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class EvalError(OmegaCalcError):
    """An expression was evaluated outside its mathematical domain"""

    tag = "eval_error"


class SeriesDiverged(OmegaCalcError):
    """An operator series did not pass its tail test"""

    tag = "series_diverged"


class PoleError(OmegaCalcError):
    """A denominator vanished"""

    tag = "pole"


class NotConverged(OmegaCalcError):
    """An infinite product was cut off before it converged"""

    tag = "not_converged"


class UsageError(OmegaCalcError):
    """Malformed command-line input"""

    tag = "usage_error"
