"""
Inverse Deformed Derivative
Pointwise evaluation of the operator series sum_j Omega^j{(I - Omega)x} f
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from src.errors import DomainError, EvalError, SeriesDiverged
from src.features.operator_core import OmegaOperator

from .functions import RealFunction

logger = logging.getLogger(__name__)

# consecutive steps the tail test must pass before the series is cut
CALM_STEPS = 2
# consecutive growing terms on a non-contracting orbit that count as divergence
GROWTH_STEPS = 16


@dataclass(frozen=True)
class InverseConfig:
    """
    Truncation policy for the inverse-derivative series.

    The series stops once the latest increment is at most
    tail_tol * (1 + |partial sum|). With accelerate on, and when the orbit
    has a known attractor x*, each partial sum carries the trapezoidal tail
    estimate (f(y_J) + f(x*)) / 2 * (y_J - x*).
    """
    max_terms: int = 10_000
    tail_tol: float = 1e-12
    accelerate: bool = True

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be at least 1, got {self.max_terms!r}")
        if not self.tail_tol > 0:
            raise ValueError(f"tail_tol must be positive, got {self.tail_tol!r}")


@dataclass
class SeriesResult:
    """Value of a truncated series with its bookkeeping"""
    value: float
    terms: int
    last_increment: float
    accelerated: bool


def _tail_estimate(fy: float, y: float, f_star: Optional[float], x_star: float) -> float:
    if f_star is None:
        return fy * (y - x_star)
    return 0.5 * (fy + f_star) * (y - x_star)


def inverse_derivative_series(
    op: OmegaOperator,
    f: RealFunction,
    x: float,
    cfg: Optional[InverseConfig] = None,
) -> SeriesResult:
    """
    Evaluate the inverse deformed derivative of f at x with diagnostics

    Args:
        op: Operator defining the deformation
        f: Integrand
        x: Point
        cfg: Truncation policy

    Returns:
        SeriesResult holding sum_j (y_j - y_{j+1}) f(y_j) over the orbit y_j of x

    Raises:
        DomainError: If x is outside the operator's domain
        EvalError: If f is undefined on the orbit
        SeriesDiverged: If the orbit escapes or the tail test never fires
    """
    cfg = cfg or InverseConfig()
    if not op.is_valid(x):
        raise DomainError(f"{op.describe()} is undefined at x={x!r}")

    x_star = op.attractor(x) if cfg.accelerate else None
    f_star = None
    if x_star is not None:
        try:
            f_star = f(x_star)
        except EvalError:
            logger.debug("f undefined at the attractor %r, using a left-endpoint tail", x_star)

    y = x
    fy = f(y)
    partial = 0.0
    value = _tail_estimate(fy, y, f_star, x_star) if x_star is not None else 0.0
    calm = 0
    growth = 0
    previous_term = math.inf
    previous_step = 0.0

    for j in range(cfg.max_terms):
        try:
            image = op.apply(y)
        except DomainError as e:
            raise SeriesDiverged(f"orbit of x={x!r} left the domain after {j} steps: {e}")
        step = y - image
        term = step * fy
        if not math.isfinite(term):
            raise SeriesDiverged(f"non-finite term after {j} steps")
        partial += term
        f_image = f(image)

        if x_star is None:
            increment = term
            value = partial
        else:
            accelerated = partial + _tail_estimate(f_image, image, f_star, x_star)
            increment = accelerated - value
            value = accelerated

        if abs(increment) <= cfg.tail_tol * (1.0 + abs(value)):
            calm += 1
            if calm >= CALM_STEPS:
                logger.debug("inverse series for %s converged after %d terms", op.describe(), j + 1)
                return SeriesResult(value, j + 1, abs(increment), x_star is not None)
        else:
            calm = 0

        if x_star is None and abs(term) > abs(previous_term) and abs(step) >= abs(previous_step):
            growth += 1
            if growth >= GROWTH_STEPS:
                raise SeriesDiverged(f"terms grow along the orbit of x={x!r} under {op.describe()}")
        else:
            growth = 0

        previous_term = term
        previous_step = step
        y = image
        fy = f_image

    raise SeriesDiverged(f"tail test did not fire within {cfg.max_terms} terms")


def inverse_derivative(
    op: OmegaOperator,
    f: RealFunction,
    x: float,
    cfg: Optional[InverseConfig] = None,
) -> float:
    """
    Evaluate the inverse deformed derivative of f at x

    Raises:
        DomainError, EvalError, SeriesDiverged: See inverse_derivative_series
    """
    return inverse_derivative_series(op, f, x, cfg).value


def inverse_derivative_function(
    op: OmegaOperator,
    f: RealFunction,
    cfg: Optional[InverseConfig] = None,
) -> RealFunction:
    """The inverse derivative of f as a function of x"""
    return RealFunction(lambda x: inverse_derivative(op, f, x, cfg), label=f"D^-1[{f.label}]")
