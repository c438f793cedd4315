"""
Mobius Package

The 2x2 matrix representation of the degree-one deformation, dilation and
translation operators and the fractional-linear action that realises their
composition.
"""

from .matrix import (
    MobiusMatrix,
    act,
    multiply,
    omega_matrix,
    dilation_matrix,
    translation_matrix,
    composite_matrix,
    operator_composition,
    factor_action_check,
)

__all__ = [
    'MobiusMatrix',
    'act',
    'multiply',
    'omega_matrix',
    'dilation_matrix',
    'translation_matrix',
    'composite_matrix',
    'operator_composition',
    'factor_action_check',
]
