"""
Operator Orbits
Iterated application x, omega(x), omega^2(x), ... of a point map
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

from src.errors import DomainError

from .operators import OmegaOperator

logger = logging.getLogger(__name__)


@dataclass
class Orbit:
    """Partial orbit of a point under an operator"""
    points: List[float] = field(default_factory=list)
    complete: bool = True
    stopped_at: Optional[int] = None  # index of the step that left the domain

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, j: int) -> float:
        return self.points[j]


def orbit(op: OmegaOperator, x: float, j_max: int) -> Orbit:
    """
    Compute [x, omega(x), ..., omega^j_max(x)]

    The iteration stops early instead of raising when a step leaves the
    operator's domain or stops being finite; the returned orbit is then
    flagged incomplete.

    Args:
        op: Operator to iterate
        x: Starting point
        j_max: Number of applications

    Returns:
        Orbit with up to j_max + 1 points
    """
    points = [x]
    current = x
    for j in range(1, j_max + 1):
        if not op.is_valid(current):
            logger.debug("orbit of %s left the domain at step %d", op.describe(), j)
            return Orbit(points, complete=False, stopped_at=j)
        try:
            current = op.apply(current)
        except DomainError as e:
            logger.debug("orbit of %s stopped at step %d: %s", op.describe(), j, e)
            return Orbit(points, complete=False, stopped_at=j)
        if not math.isfinite(current):
            return Orbit(points, complete=False, stopped_at=j)
        points.append(current)
    return Orbit(points)
