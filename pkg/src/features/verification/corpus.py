"""
Random Inputs for the Property Suites
A fixed expression corpus and seeded samplers for operators and points
"""
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.features.calculus import RealFunction
from src.features.operator_core import Dilation, OmegaOperator, PowerDeformation, Translation, TwoParameter

# total on the real line, smooth, and of moderate size on [-1.5, 1.5]
EXPRESSION_CORPUS = (
    "x",
    "3",
    "x^2",
    "x^3 - 2*x",
    "exp(x)",
    "sin(x)",
    "cos(2*x)",
    "1/(1 + x^2)",
    "sqrt(x^2 + 1)",
    "exp(-x^2)",
    "x*sin(x)",
    "ln(x^2 + 1)",
    "(x - 1)^4",
)

MAX_ATTEMPTS = 200


def corpus_functions() -> List[RealFunction]:
    return [RealFunction.of(text) for text in EXPRESSION_CORPUS]


def _magnitude(rng: np.random.Generator, low: float, high: float) -> float:
    """Uniform magnitude in [low, high] with a random sign"""
    value = float(rng.uniform(low, high))
    return value if rng.random() < 0.5 else -value


def random_operator(rng: np.random.Generator) -> OmegaOperator:
    """One operator drawn from all four families with moderate parameters"""
    kind = int(rng.integers(4))
    if kind == 0:
        return Translation(_magnitude(rng, 0.05, 0.5))
    if kind == 1:
        if rng.random() < 0.5:
            return Dilation(float(rng.uniform(0.3, 0.9)))
        return Dilation(float(rng.uniform(1.1, 2.0)))
    if kind == 2:
        return PowerDeformation(_magnitude(rng, 0.05, 0.5), int(rng.integers(1, 4)))
    return TwoParameter(_magnitude(rng, 0.05, 0.5), _magnitude(rng, 0.2, 1.5))


def sample_point(
    rng: np.random.Generator,
    op: OmegaOperator,
    low: float = -1.5,
    high: float = 1.5,
    accept: Optional[Callable[[float], bool]] = None,
    min_step: float = 0.0,
) -> Optional[float]:
    """
    Draw x in [low, high] inside the operator's domain

    Args:
        rng: Generator to draw from
        op: Operator whose domain x must lie in
        low: Lower bound
        high: Upper bound
        accept: Extra predicate on x
        min_step: Minimum |omega(x) - x|

    Returns:
        A point, or None if MAX_ATTEMPTS draws all failed
    """
    for _ in range(MAX_ATTEMPTS):
        x = float(rng.uniform(low, high))
        if not op.is_valid(x):
            continue
        if min_step and abs(op.apply(x) - x) < min_step:
            continue
        if accept is not None and not accept(x):
            continue
        return x
    return None


def operator_and_point(
    rng: np.random.Generator,
    min_step: float = 1e-3,
) -> Tuple[OmegaOperator, Optional[float]]:
    """A random operator with a point where its difference quotient is well away from singular"""
    op = random_operator(rng)
    return op, sample_point(rng, op, min_step=min_step)
