"""
Omega-Exponential Evaluator
Truncated infinite-product evaluation of the eigenfunctions of the deformed
derivative, with convergence bookkeeping
"""
import logging
import math
from dataclasses import dataclass

from src.errors import DomainError, NotConverged, PoleError
from src.features.calculus import RealFunction
from src.features.operator_core import OmegaOperator, Translation, orbit

logger = logging.getLogger(__name__)

PREFLIGHT_STEPS = 8
POLE_EPS = 1e-13


@dataclass
class EigenEvaluation:
    """Outcome of one eigenfunction evaluation"""
    value: float
    converged: bool
    factors: int
    last_deviation: float  # |factor - 1| where the product was cut
    method: str  # 'product', 'reindexed' or 'closed_form'


def contracting_orbit(op: OmegaOperator, x: float, steps: int = PREFLIGHT_STEPS) -> bool:
    """
    Pre-flight scan: do the orbit's step sizes shrink over `steps` consecutive steps?

    Args:
        op: Operator to iterate
        x: Starting point
        steps: Number of consecutive comparisons required

    Returns:
        True if every |omega^{j+1}x - omega^j x| is strictly smaller than
        (or equal to zero and no larger than) the one before it
    """
    points = orbit(op, x, steps + 1)
    if not points.complete:
        return False
    sizes = [abs(b - a) for a, b in zip(points.points, points.points[1:])]
    return all(after < before or after == 0 for before, after in zip(sizes, sizes[1:]))


@dataclass(frozen=True)
class EigenfunctionEvaluator:
    """
    Evaluates the Omega-exponential with eigenvalue `scale`:

        E(x) = prod_j 1 / (1 + scale * (omega^{j+1}x - omega^j x))

    The product is cut once the next factor differs from 1 by at most
    product_tol. When the orbit has a known attractor x*, the remaining
    factors are replaced by their first-order telescoped value
    exp(scale * (y_J - x*)), and the cut is also accepted as soon as the
    second-order remainder bound 0.5 * |scale*d_J| * |scale*(y_J - x*)|
    drops below product_tol.
    """
    op: OmegaOperator
    product_tol: float = 1e-14
    max_factors: int = 10_000
    scale: float = 1.0

    def __post_init__(self):
        if not self.product_tol > 0:
            raise ValueError(f"product_tol must be positive, got {self.product_tol!r}")
        if self.max_factors < 1:
            raise ValueError(f"max_factors must be at least 1, got {self.max_factors!r}")

    def evaluate(self, x: float) -> EigenEvaluation:
        """
        Evaluate the forward-orbit product at x

        Returns:
            EigenEvaluation; converged is False when the orbit fails the
            pre-flight scan or max_factors is reached

        Raises:
            PoleError: If a factor denominator vanishes
            DomainError: If x is outside the operator's domain
        """
        if isinstance(self.op, Translation) and self.op.h != 0:
            return self._translation(x)
        return self._product(self.op, x, reciprocal=True, method='product')

    def evaluate_reindexed(self, x: float) -> EigenEvaluation:
        """
        Evaluate the backward-orbit form prod_j (1 + scale*(omega^{-j}x - omega^{-j-1}x))

        This is the same eigenfunction written over the inverse operator's
        orbit, which contracts when the forward orbit expands.
        """
        if isinstance(self.op, Translation) and self.op.h != 0:
            return self._translation(x)
        return self._product(self.op.inverse(), x, reciprocal=False, method='reindexed')

    def evaluate_convergent(self, x: float) -> EigenEvaluation:
        """Use the forward product when its orbit converges, the reindexed form otherwise"""
        if self.op.attractor(x) is None and self.op.inverse().attractor(x) is not None:
            return self.evaluate_reindexed(x)
        return self.evaluate(x)

    def as_function(self, reindexed: bool = False, auto: bool = False) -> RealFunction:
        """The eigenfunction as a RealFunction that raises NotConverged on truncation"""
        def value(y: float) -> float:
            if auto:
                result = self.evaluate_convergent(y)
            elif reindexed:
                result = self.evaluate_reindexed(y)
            else:
                result = self.evaluate(y)
            return _require_converged(result, self.op, y)

        return RealFunction(value, label=f"E[{self.op.describe()}]")

    def _translation(self, x: float) -> EigenEvaluation:
        # no fixed point: E is the solution of E(x+h) = (1 + scale*h) E(x) with E(0) = 1
        h = self.op.h
        base = 1.0 + self.scale * h
        if abs(base) <= POLE_EPS:
            raise PoleError(f"translation exponential has base 1 + scale*h = {base!r}")
        if base < 0:
            raise DomainError(f"translation exponential needs 1 + scale*h > 0, got {base!r}")
        try:
            value = math.exp(x / h * math.log(base))
        except OverflowError:
            raise DomainError(f"translation exponential overflowed at x={x!r}")
        return EigenEvaluation(value, True, 0, 0.0, 'closed_form')

    def _product(self, stepper: OmegaOperator, x: float, reciprocal: bool, method: str) -> EigenEvaluation:
        if not stepper.is_valid(x):
            raise DomainError(f"{stepper.describe()} is undefined at x={x!r}")
        if not contracting_orbit(stepper, x):
            logger.debug("orbit of x=%r under %s failed the pre-flight scan", x, stepper.describe())
            return EigenEvaluation(math.nan, False, 0, math.nan, method)

        x_star = stepper.attractor(x)
        value = 1.0
        y = x
        deviation = math.nan
        for j in range(self.max_factors):
            try:
                image = stepper.apply(y)
            except DomainError:
                return EigenEvaluation(math.nan, False, j, deviation, method)
            d = self.scale * (image - y)
            deviation = abs(d)

            if reciprocal and abs(1.0 + d) <= POLE_EPS:
                raise PoleError(f"factor {j} of the product at x={x!r} has a vanishing denominator")

            if x_star is None:
                done = deviation <= self.product_tol
            else:
                remainder = 0.5 * deviation * abs(self.scale * (y - x_star))
                done = deviation <= self.product_tol or remainder <= self.product_tol
            if done:
                if x_star is not None:
                    value *= math.exp(self.scale * (y - x_star))
                return EigenEvaluation(value, True, j, deviation, method)

            value = value / (1.0 + d) if reciprocal else value * (1.0 - d)
            y = image

        logger.debug("product at x=%r hit max_factors=%d", x, self.max_factors)
        return EigenEvaluation(value, False, self.max_factors, deviation, method)


def _require_converged(result: EigenEvaluation, op: OmegaOperator, x: float) -> float:
    if not result.converged:
        raise NotConverged(
            f"exponential of {op.describe()} at x={x!r} did not converge "
            f"after {result.factors} factors ({result.method})"
        )
    return result.value


def eigen_product(ev: EigenfunctionEvaluator, x: float) -> float:
    """
    Omega-exponential at x via the truncated forward-orbit product

    Raises:
        PoleError: If a factor denominator vanishes
        NotConverged: If the product could not be brought within product_tol
    """
    return _require_converged(ev.evaluate(x), ev.op, x)


def eigen_product_reindexed(ev: EigenfunctionEvaluator, x: float) -> float:
    """
    Omega-exponential at x via the backward-orbit product

    Raises:
        NotConverged: If the backward orbit does not converge
    """
    return _require_converged(ev.evaluate_reindexed(x), ev.op, x)
