"""
Deformed Derivative
The difference quotient (f(omega(x)) - f(x)) / (omega(x) - x) and the
bracket numbers it produces on monomials
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from src.errors import DomainError, InvalidOperator
from src.features.operator_core import OmegaOperator, PowerDeformation

from .functions import RealFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivativeConfig:
    """
    Singular-point policy for the deformed derivative.

    Below singular_eps the quotient is replaced by the classical derivative,
    analytic when the function carries one, otherwise a central difference
    with step fd_step.
    """
    singular_eps: float = 1e-12
    fd_step: float = 1e-6

    def __post_init__(self):
        if not self.singular_eps > 0:
            raise ValueError(f"singular_eps must be positive, got {self.singular_eps!r}")
        if not self.fd_step > 0:
            raise ValueError(f"fd_step must be positive, got {self.fd_step!r}")


def classical_derivative(f: RealFunction, x: float, cfg: Optional[DerivativeConfig] = None) -> float:
    """
    Ordinary derivative f'(x)

    Args:
        f: Function, optionally carrying an analytic derivative
        x: Point
        cfg: Supplies the central-difference step

    Returns:
        Analytic f'(x) when available, else (f(x+h) - f(x-h)) / 2h
    """
    if f.derivative is not None:
        return f.derivative(x)
    cfg = cfg or DerivativeConfig()
    h = cfg.fd_step
    return (f(x + h) - f(x - h)) / (2 * h)


def deformed_derivative(op: OmegaOperator, f: RealFunction, x: float, cfg: Optional[DerivativeConfig] = None) -> float:
    """
    Evaluate the deformed derivative of f at x

    Args:
        op: Operator defining the deformation
        f: Function to differentiate
        x: Point
        cfg: Singular-point policy

    Returns:
        (f(omega(x)) - f(x)) / (omega(x) - x), or f'(x) at (near) fixed points of omega

    Raises:
        DomainError: If x is outside the operator's domain
        EvalError: If f is undefined at x or omega(x)
    """
    cfg = cfg or DerivativeConfig()
    image = op.apply(x)
    step = image - x
    if abs(step) < cfg.singular_eps:
        logger.debug("singular point x=%r for %s, using classical derivative", x, op.describe())
        return classical_derivative(f, x, cfg)
    return (f(image) - f(x)) / step


def bracket_ratio(lam: float, k: int, x: float) -> float:
    """
    Ratio r = (1 + lambda*k*x^k)^(-1/k) = omega(x)/x of the power deformation

    Raises:
        DomainError: If 1 + lambda*k*x^k <= 0
    """
    op = PowerDeformation(lam, k)
    if not op.is_valid(x):
        raise DomainError(f"1 + lambda*k*x^k must be positive (lambda={lam!r}, k={k!r}, x={x!r})")
    return math.exp(-math.log1p(lam * k * x ** k) / k)


def bracket_number(n: int, lam: float, k: int, x: float) -> float:
    """
    Deformed integer [[n]] for the power deformation, a function of x

    Computed as the finite geometric sum of r^j for j < n, which equals
    (r^n - 1)/(r - 1) for r != 1 and n for r == 1.

    Args:
        n: Non-negative integer
        lam: Deformation parameter lambda
        k: Degree of the deformation
        x: Point

    Returns:
        [[n]](x)

    Raises:
        DomainError: If 1 + lambda*k*x^k <= 0
        InvalidOperator: If n is negative or k is not a positive integer
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidOperator(f"n must be a non-negative integer, got {n!r}")
    r = bracket_ratio(lam, k, x)
    total = 0.0
    power = 1.0
    for _ in range(n):
        total += power
        power *= r
    return total
