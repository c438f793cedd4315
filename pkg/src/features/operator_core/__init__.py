"""
Operator Core Package

Closed-form point maps for the multiplicative operator families, their exact
inverses, closed-form composition and orbit iteration.
"""

from .operators import (
    OperatorKind,
    OmegaOperator,
    Translation,
    Dilation,
    PowerDeformation,
    TwoParameter,
    apply,
    inverse_apply,
    compose_parameters,
    compose_same_family,
    make_operator,
    two_parameter_mu_limit,
)
from .orbit import Orbit, orbit

__all__ = [
    'OperatorKind',
    'OmegaOperator',
    'Translation',
    'Dilation',
    'PowerDeformation',
    'TwoParameter',
    'apply',
    'inverse_apply',
    'compose_parameters',
    'compose_same_family',
    'make_operator',
    'two_parameter_mu_limit',
    'Orbit',
    'orbit',
]
