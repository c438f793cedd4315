"""
Mobius Matrices
2x2 matrices acting on the real line by fractional-linear maps, and the
factorisation of the degree-one deformation, dilation and translation
operators into them
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from src.errors import InvalidOperator, PoleError
from src.features.operator_core import Dilation, OmegaOperator, PowerDeformation, Translation

logger = logging.getLogger(__name__)

# |cx + d| at or below this multiple of the entry scale counts as a pole
POLE_SCALE = 1e-300


@dataclass(frozen=True)
class MobiusMatrix:
    """Nonsingular matrix [[a, b], [c, d]] acting by x -> (ax + b) / (cx + d)"""
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if self.determinant == 0:
            raise InvalidOperator(f"singular matrix: ad - bc = 0 for {self.as_tuple()!r}")

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    @classmethod
    def from_array(cls, m: np.ndarray) -> "MobiusMatrix":
        return cls(float(m[0, 0]), float(m[0, 1]), float(m[1, 0]), float(m[1, 1]))

    @classmethod
    def identity(cls) -> "MobiusMatrix":
        return cls(1.0, 0.0, 0.0, 1.0)

    def act(self, x: float) -> float:
        """
        Fractional-linear action (ax + b) / (cx + d)

        Raises:
            PoleError: If the denominator vanishes relative to the entry scale
        """
        denominator = self.c * x + self.d
        scale = abs(self.a) + abs(self.b) + abs(self.c) + abs(self.d)
        if abs(denominator) <= POLE_SCALE * scale:
            raise PoleError(f"matrix {self.as_tuple()!r} has a pole at x={x!r}")
        return (self.a * x + self.b) / denominator

    def __matmul__(self, other: "MobiusMatrix") -> "MobiusMatrix":
        return MobiusMatrix.from_array(self.as_array() @ other.as_array())

    def inverse(self) -> "MobiusMatrix":
        """Adjugate divided by the determinant; acts as the inverse map"""
        det = self.determinant
        return MobiusMatrix(self.d / det, -self.b / det, -self.c / det, self.a / det)

    @classmethod
    def from_operator(cls, op: OmegaOperator) -> "MobiusMatrix":
        """
        Matrix whose action equals the operator's point map

        Raises:
            InvalidOperator: For families without a fractional-linear point map
        """
        if isinstance(op, Translation):
            return translation_matrix(op.h)
        if isinstance(op, Dilation):
            return dilation_matrix(op.q)
        if isinstance(op, PowerDeformation) and op.k == 1:
            return omega_matrix(op.lam)
        raise InvalidOperator(f"{op.describe()} is not a fractional-linear map")


def act(m: MobiusMatrix, x: float) -> float:
    """Apply m to x (see MobiusMatrix.act)"""
    return m.act(x)


def multiply(m1: MobiusMatrix, m2: MobiusMatrix) -> MobiusMatrix:
    """Matrix product m1 * m2, whose action is m2 first, then m1"""
    return m1 @ m2


def omega_matrix(lam: float) -> MobiusMatrix:
    """[[1, 0], [lambda, 1]], acting as x / (1 + lambda*x)"""
    return MobiusMatrix(1.0, 0.0, lam, 1.0)


def dilation_matrix(q: float) -> MobiusMatrix:
    """
    [[sqrt(q), 0], [0, 1/sqrt(q)]], acting as x -> q*x

    Raises:
        InvalidOperator: If q <= 0
    """
    if not q > 0:
        raise InvalidOperator(f"dilation matrix requires q > 0, got q={q!r}")
    root = math.sqrt(q)
    return MobiusMatrix(root, 0.0, 0.0, 1.0 / root)


def translation_matrix(h: float) -> MobiusMatrix:
    """[[1, h], [0, 1]], acting as x -> x + h"""
    return MobiusMatrix(1.0, h, 0.0, 1.0)


def composite_matrix(lam: float, q: float, h: float) -> MobiusMatrix:
    """
    Product of the deformation, dilation and translation factors

    Equals [[sqrt(q), sqrt(q)*h], [sqrt(q)*lambda, sqrt(q)*lambda*h + 1/sqrt(q)]];
    its action applies the translation first and the deformation last.
    """
    return omega_matrix(lam) @ dilation_matrix(q) @ translation_matrix(h)


def operator_composition(lam: float, q: float, h: float, x: float) -> float:
    """
    omega_lambda(q * (x + h)) from the operator point maps, translation first

    Raises:
        DomainError: If q * (x + h) leaves the deformation's domain
    """
    y = Translation(h).apply(x)
    if q != 1:
        y = Dilation(q).apply(y)
    return PowerDeformation(lam, 1).apply(y)


def factor_action_check(lam: float, q: float, h: float, x: float) -> float:
    """
    Compare the composite matrix action with the three operator point maps

    Args:
        lam: Degree-one deformation parameter
        q: Dilation factor (q = 1 skips the dilation)
        h: Translation step
        x: Point

    Returns:
        |M x - omega_lambda(q * (x + h))|

    Raises:
        PoleError: If the matrix action has a pole at x
        DomainError: If an intermediate point leaves the deformation's domain
    """
    via_matrix = composite_matrix(lam, q, h).act(x)
    residual = abs(via_matrix - operator_composition(lam, q, h, x))
    logger.debug("factor action residual %.3e at lambda=%r q=%r h=%r x=%r", residual, lam, q, h, x)
    return residual
