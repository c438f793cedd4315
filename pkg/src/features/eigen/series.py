"""
Series Form of the Omega-Exponential
E = sum_n (D^-1)^n 1, evaluated by iterating the inverse derivative over one
shared orbit
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from src.errors import DomainError, SeriesDiverged
from src.features.calculus import InverseConfig
from src.features.operator_core import OmegaOperator

logger = logging.getLogger(__name__)


@dataclass
class EigenSeriesResult:
    value: float
    terms: int
    last_term: float  # magnitude of (D^-1)^{terms} 1 at x
    orbit_length: int


def _shared_orbit(op: OmegaOperator, x: float, x_star: float, cfg: InverseConfig) -> List[float]:
    points = [x]
    y = x
    for _ in range(cfg.max_terms):
        try:
            image = op.apply(y)
        except DomainError as e:
            raise SeriesDiverged(f"orbit of x={x!r} left the domain: {e}")
        points.append(image)
        if image == y or 0.5 * abs(image - y) * abs(image - x_star) <= cfg.tail_tol:
            return points
        y = image
    raise SeriesDiverged(f"orbit of x={x!r} did not settle within {cfg.max_terms} steps")


def eigen_series(
    op: OmegaOperator,
    x: float,
    cfg: Optional[InverseConfig] = None,
    j_max: int = 30,
) -> EigenSeriesResult:
    """
    Omega-exponential at x as the partial sum of (D^-1)^n 1 for n <= j_max

    Each iterate e_n is held on the orbit points y_0 = x, y_1, ..., y_N and
    e_{n+1}(y_m) is the suffix sum of (y_i - y_{i+1}) e_n(y_i) for i >= m,
    closed by the trapezoidal tail toward the attractor (where e_0 = 1 and
    every later iterate vanishes).

    Args:
        op: Operator whose orbit from x converges to a known attractor
        x: Point
        cfg: Orbit truncation (max_terms, tail_tol)
        j_max: Highest iterate kept

    Returns:
        EigenSeriesResult with the sum and the magnitude of its last term

    Raises:
        DomainError: If x is outside the operator's domain
        SeriesDiverged: If the orbit has no known attractor or does not settle
    """
    cfg = cfg or InverseConfig()
    if j_max < 0:
        raise ValueError(f"j_max must be non-negative, got {j_max!r}")
    if not op.is_valid(x):
        raise DomainError(f"{op.describe()} is undefined at x={x!r}")
    x_star = op.attractor(x)
    if x_star is None:
        raise SeriesDiverged(f"orbit of x={x!r} under {op.describe()} has no known attractor")

    ys = _shared_orbit(op, x, x_star, cfg)
    last = len(ys) - 1
    current = [1.0] * len(ys)
    value = 1.0
    term = 1.0
    for n in range(1, j_max + 1):
        at_star = 1.0 if n == 1 else 0.0
        running = 0.5 * (current[last] + at_star) * (ys[last] - x_star)
        following = [0.0] * len(ys)
        following[last] = running
        for m in range(last - 1, -1, -1):
            running += (ys[m] - ys[m + 1]) * current[m]
            following[m] = running
        current = following
        term = current[0]
        if not math.isfinite(term):
            raise SeriesDiverged(f"iterate {n} of the exponential series is not finite")
        value += term

    logger.debug("exponential series at x=%r: %d iterates over %d orbit points", x, j_max, len(ys))
    return EigenSeriesResult(value, j_max, abs(term), len(ys))
