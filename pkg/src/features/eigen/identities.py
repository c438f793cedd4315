"""
Eigenfunction Identities
Residual checks for the eigen-equation, the scaled eigen-relation, the
Omega-invariants and the q-reciprocal identity
"""
import logging
from dataclasses import dataclass
from typing import Optional

from src.features.calculus import DerivativeConfig, RealFunction, deformed_derivative
from src.features.operator_core import Dilation, OmegaOperator

from .evaluator import EigenfunctionEvaluator, eigen_product, _require_converged

logger = logging.getLogger(__name__)


@dataclass
class InvarianceResidual:
    """How far F is from being an Omega-invariant at one point"""
    shift_residual: float  # |F(omega(x)) - F(x)|
    derivative_residual: float  # |D F (x)|

    @property
    def worst(self) -> float:
        return max(self.shift_residual, self.derivative_residual)


def eigen_residual(ev: EigenfunctionEvaluator, x: float, cfg: Optional[DerivativeConfig] = None) -> float:
    """
    |D E (x) - scale * E(x)| for the evaluator's exponential E

    Raises:
        PoleError, NotConverged: From the product evaluations
    """
    e = RealFunction(lambda y: eigen_product(ev, y), label=f"E[{ev.op.describe()}]")
    return abs(deformed_derivative(ev.op, e, x, cfg) - ev.scale * e(x))


def scaled_eigen_check(
    op: OmegaOperator,
    mu: float,
    x: float,
    product_tol: float = 1e-14,
    max_factors: int = 10_000,
) -> float:
    """
    Residual of E(omega(x)) = (1 + mu*(omega(x) - x)) * E(x) for the exponential with eigenvalue mu

    Both sides use whichever product form converges at their point.
    """
    ev = EigenfunctionEvaluator(op, product_tol=product_tol, max_factors=max_factors, scale=mu)
    e = ev.as_function(auto=True)
    image = op.apply(x)
    return abs(e(image) - (1.0 + mu * (image - x)) * e(x))


def invariance_check(
    op: OmegaOperator,
    F: RealFunction,
    x: float,
    cfg: Optional[DerivativeConfig] = None,
) -> InvarianceResidual:
    """
    Test whether F is an Omega-invariant at x

    An invariant satisfies F(omega(x)) = F(x), equivalently D F = 0 away
    from the fixed points of omega.
    """
    shift = abs(F(op.apply(x)) - F(x))
    slope = abs(deformed_derivative(op, F, x, cfg))
    return InvarianceResidual(shift, slope)


def exponential_partner(
    op: OmegaOperator,
    product_tol: float = 1e-14,
    max_factors: int = 10_000,
) -> EigenfunctionEvaluator:
    """
    The eigenvalue -1 exponential of the inverse operator

    For an odd omega its value at x equals E_inv(-x). It satisfies
    F(x) = (1 + omega(x) - x) * F(omega(x)) for every operator.
    """
    return EigenfunctionEvaluator(op.inverse(), product_tol=product_tol, max_factors=max_factors, scale=-1.0)


def invariant_product(
    op: OmegaOperator,
    product_tol: float = 1e-14,
    max_factors: int = 10_000,
) -> RealFunction:
    """
    P(x) = E_op(x) * F(x), with F the exponential_partner of op

    E_op(omega(x)) = (1 + omega(x) - x) * E_op(x) while F divides by the
    same factor, so P is an Omega-invariant wherever both products converge.
    Both factors use whichever product form converges at the point.
    """
    forward = EigenfunctionEvaluator(op, product_tol=product_tol, max_factors=max_factors)
    partner = exponential_partner(op, product_tol, max_factors)

    def value(y: float) -> float:
        left = _require_converged(forward.evaluate_convergent(y), op, y)
        right = _require_converged(partner.evaluate_convergent(y), partner.op, y)
        return left * right

    return RealFunction(value, label=f"P[{op.describe()}]")


def invariant_product_check(
    op: OmegaOperator,
    x: float,
    cfg: Optional[DerivativeConfig] = None,
    product_tol: float = 1e-14,
    max_factors: int = 10_000,
) -> InvarianceResidual:
    """invariance_check applied to the product of the exponential and its partner"""
    return invariance_check(op, invariant_product(op, product_tol, max_factors), x, cfg)


def reciprocal_identity_check(q: float, x: float, product_tol: float = 1e-14, max_factors: int = 10_000) -> float:
    """
    |1/E_q(x) - E_{1/q}(-x)|

    Each side is evaluated through the product form whose orbit converges,
    so for q < 1 the 1/q exponential runs over its backward orbit.

    Raises:
        InvalidOperator: If q <= 0 or q == 1
    """
    ev_q = EigenfunctionEvaluator(Dilation(q), product_tol=product_tol, max_factors=max_factors)
    ev_inv = EigenfunctionEvaluator(Dilation(1.0 / q), product_tol=product_tol, max_factors=max_factors)
    left = _require_converged(ev_q.evaluate_convergent(x), ev_q.op, x)
    right = _require_converged(ev_inv.evaluate_convergent(-x), ev_inv.op, -x)
    logger.debug("reciprocal identity q=%g x=%g: 1/E=%r partner=%r", q, x, 1.0 / left, right)
    return abs(1.0 / left - right)
