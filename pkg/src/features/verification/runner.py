"""
Suite Runner
Runs registered checks with per-check seeded generators, optionally on a
thread pool, and returns results in registration order
"""
import logging
import zlib
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

from src.errors import OmegaCalcError, UsageError

from .checks import CheckResult
from .suites import SUITES, Check

logger = logging.getLogger(__name__)


def suite_names() -> Tuple[str, ...]:
    """Registered suites plus 'all'"""
    return ("all",) + tuple(SUITES)


def selected_checks(suite: str) -> List[Check]:
    """
    Checks belonging to a suite name

    Raises:
        UsageError: If the suite is unknown
    """
    if suite == "all":
        return [c for checks in SUITES.values() for c in checks]
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(suite_names())}")
    return list(SUITES[suite])


def check_generator(seed: int, c: Check) -> np.random.Generator:
    """Generator that depends only on the seed and the check's identity"""
    return np.random.default_rng([seed, zlib.crc32(f"{c.suite}.{c.name}".encode("utf-8"))])


def run_check(c: Check, seed: int) -> CheckResult:
    logger.debug("running %s.%s", c.suite, c.name)
    try:
        return c.run(check_generator(seed, c))
    except OmegaCalcError as e:
        logger.error("%s.%s raised %s: %s", c.suite, c.name, e.tag, e)
        failed = CheckResult(c.suite, c.name, c.tolerance)
        failed.cases = 1
        failed.failures = 1
        failed.examples.append(f"{e.tag}: {e}")
        return failed


def run_suites(suite: str = "all", seed: int = 0, workers: int = 1) -> List[CheckResult]:
    """
    Run every check of a suite

    Args:
        suite: Suite name or 'all'
        seed: Base seed; each check derives its own generator from it
        workers: Thread count; output order does not depend on it

    Returns:
        One CheckResult per check, in registration order
    """
    checks = selected_checks(suite)
    if workers <= 1:
        return [run_check(c, seed) for c in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: run_check(c, seed), checks))
