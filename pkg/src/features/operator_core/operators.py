"""
Multiplicative Operators
Closed-form point maps x -> omega(x) for the translation, q-dilation,
power-deformation and two-parameter operator families
"""
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from src.errors import DomainError, IncompatibleOperators, InvalidOperator


class OperatorKind(Enum):
    """Operator families"""
    TRANSLATION = "translation"
    DILATION = "dilation"
    POWER = "power"
    TWO_PARAMETER = "twoparam"


class OmegaOperator(ABC):
    """
    A multiplicative linear operator, fully determined by its point map.

    Acting on a function, the operator gives (Omega f)(x) = f(omega(x)), so
    only the map on points is stored. Instances are immutable.
    """

    kind: OperatorKind

    @abstractmethod
    def is_valid(self, x: float) -> bool:
        """Whether omega(x) exists as a real number"""

    @abstractmethod
    def _map(self, x: float) -> float:
        """Point map without domain checks"""

    @abstractmethod
    def inverse(self) -> "OmegaOperator":
        """The parameter-negated operator whose point map inverts this one"""

    @abstractmethod
    def attractor(self, x: float) -> Optional[float]:
        """
        Fixed point the orbit of x converges to, if the closed form guarantees one

        Args:
            x: Starting point of the orbit

        Returns:
            The limit point, or None when the orbit is not known to converge
        """

    @property
    @abstractmethod
    def params(self) -> Dict[str, float]:
        """Parameters keyed by their command-line names"""

    def apply(self, x: float) -> float:
        """
        Evaluate the point map omega(x)

        Args:
            x: Point in the operator's domain

        Returns:
            omega(x)

        Raises:
            DomainError: If x lies outside the domain
        """
        if not self.is_valid(x):
            raise DomainError(f"{self.describe()} is undefined at x={x!r}")
        try:
            return self._map(x)
        except (OverflowError, ValueError) as e:
            raise DomainError(f"{self.describe()} failed at x={x!r}: {e}")

    def inverse_apply(self, y: float) -> float:
        """
        Evaluate the inverse point map, so that inverse_apply(apply(x)) == x

        Args:
            y: Point in the inverse operator's domain

        Returns:
            The preimage of y

        Raises:
            DomainError: If y lies outside the inverse operator's domain
        """
        return self.inverse().apply(y)

    def describe(self) -> str:
        """Render the operator in the command-line operator grammar"""
        body = ",".join(f"{name}={value!r}" for name, value in self.params.items())
        return f"{self.kind.value}:{body}"

    def __call__(self, x: float) -> float:
        return self.apply(x)


@dataclass(frozen=True)
class Translation(OmegaOperator):
    """Shift operator: omega(x) = x + h"""
    h: float

    kind = OperatorKind.TRANSLATION

    def is_valid(self, x: float) -> bool:
        return math.isfinite(x)

    def _map(self, x: float) -> float:
        return x + self.h

    def inverse(self) -> "Translation":
        return Translation(-self.h)

    def attractor(self, x: float) -> Optional[float]:
        return x if self.h == 0 else None

    @property
    def params(self) -> Dict[str, float]:
        return {"h": self.h}


@dataclass(frozen=True)
class Dilation(OmegaOperator):
    """q-dilation operator: omega(x) = q * x"""
    q: float

    kind = OperatorKind.DILATION

    def __post_init__(self):
        if not math.isfinite(self.q) or self.q <= 0:
            raise InvalidOperator(f"dilation requires q > 0, got q={self.q!r}")
        if self.q == 1:
            raise InvalidOperator("dilation with q = 1 is the identity and has no deformed derivative")

    def is_valid(self, x: float) -> bool:
        return math.isfinite(x)

    def _map(self, x: float) -> float:
        return self.q * x

    def inverse(self) -> "Dilation":
        return Dilation(1.0 / self.q)

    def attractor(self, x: float) -> Optional[float]:
        if x == 0 or self.q < 1:
            return 0.0
        return None

    @property
    def params(self) -> Dict[str, float]:
        return {"q": self.q}


@dataclass(frozen=True)
class PowerDeformation(OmegaOperator):
    """
    Degree-k deformation: omega(x) = x / (1 + lambda*k*x^k)^(1/k).

    The k-th root is the real principal root, computed as exp(ln(base)/k),
    so the map exists only where the base is positive.
    """
    lam: float
    k: int

    kind = OperatorKind.POWER

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidOperator(f"power deformation requires an integer k >= 1, got k={self.k!r}")
        if not math.isfinite(self.lam):
            raise InvalidOperator(f"lambda must be finite, got {self.lam!r}")

    def _shift(self, x: float) -> float:
        return self.lam * self.k * x ** self.k

    def is_valid(self, x: float) -> bool:
        if not math.isfinite(x):
            return False
        try:
            return 1.0 + self._shift(x) > 0
        except OverflowError:
            # |x^k| overflowed; only the sign of lambda*x^k matters
            sign = 1.0 if self.k % 2 == 0 or x > 0 else -1.0
            return self.lam * sign > 0

    def _map(self, x: float) -> float:
        return x * math.exp(-math.log1p(self._shift(x)) / self.k)

    def inverse(self) -> "PowerDeformation":
        return PowerDeformation(-self.lam, self.k)

    def attractor(self, x: float) -> Optional[float]:
        if x == 0:
            return 0.0
        if self.lam * x ** self.k > 0:
            return 0.0
        return None

    @property
    def params(self) -> Dict[str, float]:
        return {"lambda": self.lam, "k": self.k}


@dataclass(frozen=True)
class TwoParameter(OmegaOperator):
    """Two-parameter deformation: omega(x) = x + ln(1 + lambda*mu*e^(-mu*x)) / mu"""
    lam: float
    mu: float

    kind = OperatorKind.TWO_PARAMETER

    def __post_init__(self):
        if not math.isfinite(self.mu) or self.mu == 0:
            raise InvalidOperator("two-parameter operator requires mu != 0; use two_parameter_mu_limit for mu -> 0")
        if not math.isfinite(self.lam):
            raise InvalidOperator(f"lambda must be finite, got {self.lam!r}")

    def is_valid(self, x: float) -> bool:
        if not math.isfinite(x):
            return False
        try:
            return 1.0 + self.lam * self.mu * math.exp(-self.mu * x) > 0
        except OverflowError:
            return self.lam * self.mu > 0

    def _map(self, x: float) -> float:
        return x + math.log1p(self.lam * self.mu * math.exp(-self.mu * x)) / self.mu

    def apply_log_form(self, x: float) -> float:
        """
        Equivalent form ln(e^(mu*x) + lambda*mu) / mu of the point map

        Raises:
            DomainError: If the logarithm argument is not positive
        """
        try:
            argument = math.exp(self.mu * x) + self.lam * self.mu
        except OverflowError as e:
            raise DomainError(f"{self.describe()} overflowed at x={x!r}: {e}")
        if argument <= 0:
            raise DomainError(f"{self.describe()} is undefined at x={x!r}")
        return math.log(argument) / self.mu

    def inverse(self) -> "TwoParameter":
        return TwoParameter(-self.lam, self.mu)

    def attractor(self, x: float) -> Optional[float]:
        return x if self.lam == 0 else None

    @property
    def params(self) -> Dict[str, float]:
        return {"lambda": self.lam, "mu": self.mu}


def apply(op: OmegaOperator, x: float) -> float:
    """Evaluate omega(x) for op (see OmegaOperator.apply)"""
    return op.apply(x)


def inverse_apply(op: OmegaOperator, y: float) -> float:
    """Evaluate the inverse point map of op (see OmegaOperator.inverse_apply)"""
    return op.inverse_apply(y)


def compose_parameters(op1: OmegaOperator, op2: OmegaOperator) -> Tuple[OperatorKind, Dict[str, float]]:
    """
    Compute the raw parameters of op1 o op2 without constructing the operator

    Parameters add for translations, power deformations and two-parameter
    operators sharing mu; they multiply for dilations. The result may
    describe an identity operator (for example q = 1), which the caller
    has to handle.

    Args:
        op1: Outer operator
        op2: Inner operator

    Returns:
        Tuple of (kind, parameters)

    Raises:
        IncompatibleOperators: If the pair has no closed-form composite
    """
    if type(op1) is not type(op2):
        raise IncompatibleOperators(f"cannot compose {op1.describe()} with {op2.describe()}")

    if isinstance(op1, Translation):
        return op1.kind, {"h": op1.h + op2.h}
    if isinstance(op1, Dilation):
        return op1.kind, {"q": op1.q * op2.q}
    if isinstance(op1, PowerDeformation):
        if op1.k != op2.k:
            raise IncompatibleOperators(f"power deformations of degree {op1.k} and {op2.k} do not compose in closed form")
        return op1.kind, {"lambda": op1.lam + op2.lam, "k": op1.k}
    if isinstance(op1, TwoParameter):
        if op1.mu != op2.mu:
            raise IncompatibleOperators("two-parameter operators compose in closed form only for equal mu")
        return op1.kind, {"lambda": op1.lam + op2.lam, "mu": op1.mu}

    raise IncompatibleOperators(f"unsupported operator {op1!r}")


def compose_same_family(op1: OmegaOperator, op2: OmegaOperator) -> OmegaOperator:
    """
    Closed-form composite op1 o op2 (op2 acts first)

    Raises:
        IncompatibleOperators: If the pair has no closed-form composite
        InvalidOperator: If the composite is a dilation with q = 1
    """
    kind, params = compose_parameters(op1, op2)
    return make_operator(kind, params)


def make_operator(kind: OperatorKind, params: Dict[str, float]) -> OmegaOperator:
    """
    Build an operator from its kind and parameter map

    Raises:
        InvalidOperator: If a parameter is missing or violates an invariant
    """
    try:
        if kind is OperatorKind.TRANSLATION:
            return Translation(float(params["h"]))
        if kind is OperatorKind.DILATION:
            return Dilation(float(params["q"]))
        if kind is OperatorKind.POWER:
            k = params["k"]
            if float(k) != int(k):
                raise InvalidOperator(f"k must be an integer, got {k!r}")
            return PowerDeformation(float(params["lambda"]), int(k))
        if kind is OperatorKind.TWO_PARAMETER:
            return TwoParameter(float(params["lambda"]), float(params["mu"]))
    except KeyError as e:
        raise InvalidOperator(f"{kind.value} operator is missing parameter {e}")
    raise InvalidOperator(f"unknown operator kind {kind!r}")


def two_parameter_mu_limit(lam: float, x: float) -> float:
    """
    Analytic mu -> 0 limit of the two-parameter map, the finite-difference shift

    Args:
        lam: Deformation parameter lambda
        x: Point

    Returns:
        x + lambda
    """
    return x + lam
