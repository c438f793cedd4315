"""
Configuration loader for omega-calc.
Loads settings from environment variables (and a .env file) with sensible defaults.
"""

import logging
import os
import sys
from dataclasses import dataclass
from typing import List

from dotenv import load_dotenv

from src.features.calculus import DerivativeConfig, InverseConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenSettings:
    """Product truncation settings shared by every eigen evaluator the CLI builds"""
    product_tol: float = 1e-14
    max_factors: int = 10_000


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning("%s=%r is not a number, using %r", name, raw, default)
        return default


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %r", name, raw, default)
        return default


class Config:
    """Configuration for the calculus kernels and the command-line tool."""

    def __init__(self, env_file: str = None):
        # values already in the environment win over the .env file
        load_dotenv(env_file)

        # Reproducibility
        self.seed = _env_int("OMEGA_CALC_SEED", 0)

        # Deformed derivative
        self.singular_eps = _env_float("OMEGA_SINGULAR_EPS", 1e-12)
        self.fd_step = _env_float("OMEGA_FD_STEP", 1e-6)

        # Inverse series
        self.max_terms = _env_int("OMEGA_MAX_TERMS", 10_000)
        self.tail_tol = _env_float("OMEGA_TAIL_TOL", 1e-12)

        # Eigen products
        self.product_tol = _env_float("OMEGA_PRODUCT_TOL", 1e-14)
        self.max_factors = _env_int("OMEGA_MAX_FACTORS", 10_000)

        # CLI
        self.workers = _env_int("OMEGA_WORKERS", 1)

        # Debug settings
        self.debug_mode = (os.getenv("DEBUG_MODE") or "false").lower() == "true"
        self.log_level = (os.getenv("LOG_LEVEL") or "WARNING").upper()

    def problems(self) -> List[str]:
        """Every setting that violates its constraint, as readable messages"""
        found = []
        for name, value in (
            ("OMEGA_SINGULAR_EPS", self.singular_eps),
            ("OMEGA_FD_STEP", self.fd_step),
            ("OMEGA_TAIL_TOL", self.tail_tol),
            ("OMEGA_PRODUCT_TOL", self.product_tol),
        ):
            if not value > 0:
                found.append(f"{name} must be positive, got {value!r}")
        for name, value in (
            ("OMEGA_MAX_TERMS", self.max_terms),
            ("OMEGA_MAX_FACTORS", self.max_factors),
            ("OMEGA_WORKERS", self.workers),
        ):
            if value < 1:
                found.append(f"{name} must be at least 1, got {value!r}")
        if logging.getLevelName(self.log_level) == f"Level {self.log_level}":
            found.append(f"LOG_LEVEL {self.log_level!r} is not a logging level")
        return found

    def validate(self) -> bool:
        """
        Validate the loaded configuration.

        Returns:
            True if configuration is valid, False otherwise
        """
        problems = self.problems()
        for problem in problems:
            logger.error("configuration: %s", problem)
        return not problems

    def derivative_config(self) -> DerivativeConfig:
        return DerivativeConfig(singular_eps=self.singular_eps, fd_step=self.fd_step)

    def inverse_config(self) -> InverseConfig:
        return InverseConfig(max_terms=self.max_terms, tail_tol=self.tail_tol)

    def eigen_settings(self) -> EigenSettings:
        return EigenSettings(product_tol=self.product_tol, max_factors=self.max_factors)


def configure_logging(level: str = "WARNING", verbose: bool = False) -> None:
    """
    Route log records to stderr so stdout carries only output records

    Args:
        level: Level name from LOG_LEVEL
        verbose: Force DEBUG regardless of level
    """
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
