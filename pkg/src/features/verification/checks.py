"""
Check Results
Tally of one property check: how many cases ran, failed or were skipped,
and the worst error seen against the tolerance
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional


def scaled_error(actual: float, expected: float) -> float:
    """|actual - expected| relative to max(1, |expected|)"""
    return abs(actual - expected) / max(1.0, abs(expected))


def relative_error(actual: float, expected: float) -> float:
    """|actual - expected| / |expected|, or |actual| when expected is zero"""
    if expected == 0:
        return abs(actual)
    return abs(actual - expected) / abs(expected)


@dataclass
class CheckResult:
    """Outcome of one named property check"""
    suite: str
    name: str
    tolerance: float
    cases: int = 0
    failures: int = 0
    skipped: int = 0
    max_error: float = 0.0
    examples: List[str] = field(default_factory=list)  # first few failing cases

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, error: float, case: Optional[str] = None) -> bool:
        """
        Count one case

        Args:
            error: Observed error for the case (NaN counts as a failure)
            case: Short description kept for the first failures

        Returns:
            True if the case passed
        """
        self.cases += 1
        ok = math.isfinite(error) and error <= self.tolerance
        if math.isfinite(error):
            self.max_error = max(self.max_error, error)
        else:
            self.max_error = math.inf
        if not ok:
            self.failures += 1
            if case is not None and len(self.examples) < 3:
                self.examples.append(f"{case}: error {error:.3e}")
        return ok

    def expect(self, condition: bool, case: Optional[str] = None) -> bool:
        """Count a pass/fail case that has no numeric error"""
        self.cases += 1
        if not condition:
            self.failures += 1
            if case is not None and len(self.examples) < 3:
                self.examples.append(case)
        return condition

    def skip(self) -> None:
        self.skipped += 1
