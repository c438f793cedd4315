"""
Calculus Package

The generalised deformed derivative, its inverse as a truncated operator
series, and the position-dependent bracket numbers.
"""

from .functions import RealFunction, monomial, constant
from .derivative import DerivativeConfig, classical_derivative, deformed_derivative, bracket_ratio, bracket_number
from .inverse import (
    InverseConfig,
    SeriesResult,
    inverse_derivative,
    inverse_derivative_series,
    inverse_derivative_function,
)

__all__ = [
    'RealFunction',
    'monomial',
    'constant',
    'DerivativeConfig',
    'classical_derivative',
    'deformed_derivative',
    'bracket_ratio',
    'bracket_number',
    'InverseConfig',
    'SeriesResult',
    'inverse_derivative',
    'inverse_derivative_series',
    'inverse_derivative_function',
]
