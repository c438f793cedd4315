"""
Real Functions
Callable wrappers over expressions and closures, with an optional analytic
derivative used at singular points of the deformed derivative
"""
from dataclasses import dataclass
from typing import Callable, Optional, Union

from src.features.expr import Expr, parse
from src.features.operator_core import OmegaOperator

RealCallable = Callable[[float], float]


@dataclass(frozen=True)
class RealFunction:
    """A deterministic real function of one real variable"""
    func: RealCallable
    derivative: Optional[RealCallable] = None
    label: str = "f"

    def __call__(self, x: float) -> float:
        return self.func(x)

    @classmethod
    def of(cls, source: Union["RealFunction", Expr, str, RealCallable], label: Optional[str] = None) -> "RealFunction":
        """
        Coerce text, an expression tree or a plain callable into a RealFunction

        Args:
            source: Function source; text is parsed with the expression grammar
            label: Optional display label

        Returns:
            The wrapped function

        Raises:
            ParseError: If text does not parse
        """
        if isinstance(source, RealFunction):
            return source
        if isinstance(source, str):
            return cls(parse(source).evaluate, label=label or source)
        if isinstance(source, Expr):
            return cls(source.evaluate, label=label or str(source))
        return cls(source, label=label or getattr(source, "__name__", "f"))

    def times(self, other: "RealFunction") -> "RealFunction":
        """Pointwise product f*g"""
        return RealFunction(lambda x: self(x) * other(x), label=f"({self.label})*({other.label})")

    def compose(self, inner: "RealFunction") -> "RealFunction":
        """Composition f(g(x))"""
        return RealFunction(lambda x: self(inner(x)), label=f"{self.label}o({inner.label})")

    def under(self, op: OmegaOperator) -> "RealFunction":
        """The image (Omega f)(x) = f(omega(x))"""
        return RealFunction(lambda x: self(op.apply(x)), label=f"{op.describe()}[{self.label}]")


def monomial(n: int) -> RealFunction:
    """x^n with its analytic derivative"""
    if n == 0:
        return constant(1.0)
    return RealFunction(lambda x: x ** n, derivative=lambda x: n * x ** (n - 1), label=f"x^{n}")


def constant(c: float) -> RealFunction:
    """The constant function c"""
    return RealFunction(lambda x: c, derivative=lambda x: 0.0, label=repr(c))
