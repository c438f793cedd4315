"""
Expression Nodes
Immutable AST for real expressions in the single variable x
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict

from src.errors import EvalError


def _checked(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise EvalError(f"{what} produced a non-finite value")
    return value


def _ln(y: float) -> float:
    if y <= 0:
        raise EvalError(f"ln is undefined for {y!r}")
    return math.log(y)


def _sqrt(y: float) -> float:
    if y < 0:
        raise EvalError(f"sqrt is undefined for {y!r}")
    return math.sqrt(y)


def _exp(y: float) -> float:
    try:
        return math.exp(y)
    except OverflowError:
        raise EvalError(f"exp overflowed at {y!r}")


FUNCTIONS: Dict[str, Callable[[float], float]] = {
    'exp': _exp,
    'ln': _ln,
    'sin': math.sin,
    'cos': math.cos,
    'sqrt': _sqrt,
}


class Expr:
    """Base class for expression nodes"""

    def evaluate(self, x: float) -> float:
        raise NotImplementedError

    def __call__(self, x: float) -> float:
        return self.evaluate(x)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Constant(Expr):
    value: float

    def evaluate(self, x: float) -> float:
        return self.value


@dataclass(frozen=True)
class Variable(Expr):
    def evaluate(self, x: float) -> float:
        return x


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr

    def evaluate(self, x: float) -> float:
        return -self.operand.evaluate(x)


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr

    def evaluate(self, x: float) -> float:
        return _checked(self.left.evaluate(x) + self.right.evaluate(x), "addition")


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr

    def evaluate(self, x: float) -> float:
        return _checked(self.left.evaluate(x) - self.right.evaluate(x), "subtraction")


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def evaluate(self, x: float) -> float:
        return _checked(self.left.evaluate(x) * self.right.evaluate(x), "multiplication")


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr

    def evaluate(self, x: float) -> float:
        denominator = self.right.evaluate(x)
        if denominator == 0:
            raise EvalError("division by zero")
        return _checked(self.left.evaluate(x) / denominator, "division")


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Expr

    def evaluate(self, x: float) -> float:
        base = self.base.evaluate(x)
        exponent = self.exponent.evaluate(x)
        if base == 0 and exponent < 0:
            raise EvalError("zero raised to a negative power")
        if base < 0 and not float(exponent).is_integer():
            raise EvalError(f"negative base {base!r} with non-integer exponent {exponent!r}")
        try:
            if float(exponent).is_integer() and abs(exponent) <= 64:
                result = base ** int(exponent)
            else:
                result = math.pow(base, exponent)
        except (OverflowError, ZeroDivisionError):
            raise EvalError(f"power {base!r}^{exponent!r} is not representable")
        return _checked(float(result), "power")


@dataclass(frozen=True)
class Call(Expr):
    name: str
    arg: Expr

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")

    def evaluate(self, x: float) -> float:
        argument = self.arg.evaluate(x)
        try:
            value = FUNCTIONS[self.name](argument)
        except ValueError:
            raise EvalError(f"{self.name} is undefined for {argument!r}")
        return _checked(value, self.name)


def to_text(expr: Expr) -> str:
    """
    Print an expression fully parenthesised, in the parser's grammar

    Args:
        expr: Expression tree

    Returns:
        Text that parses back to an expression with the same values
    """
    if isinstance(expr, Constant):
        text = repr(float(expr.value))
        return f"(-{text[1:]})" if text.startswith('-') else text
    if isinstance(expr, Variable):
        return "x"
    if isinstance(expr, Neg):
        return f"(-{to_text(expr.operand)})"
    if isinstance(expr, Call):
        return f"{expr.name}({to_text(expr.arg)})"

    symbols = {Add: '+', Sub: '-', Mul: '*', Div: '/'}
    if isinstance(expr, Pow):
        return f"({to_text(expr.base)} ^ {to_text(expr.exponent)})"
    for node_type, symbol in symbols.items():
        if isinstance(expr, node_type):
            return f"({to_text(expr.left)} {symbol} {to_text(expr.right)})"
    raise TypeError(f"not an expression node: {expr!r}")
