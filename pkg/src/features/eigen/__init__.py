"""
Eigen Package

Omega-exponentials, the eigenfunctions of the deformed derivative, as a
truncated infinite product over the operator orbit and as the iterated
inverse-derivative series, together with the eigenvalue, invariance and
reciprocal identities they satisfy.
"""

from .evaluator import (
    EigenEvaluation,
    EigenfunctionEvaluator,
    contracting_orbit,
    eigen_product,
    eigen_product_reindexed,
)
from .series import EigenSeriesResult, eigen_series
from .identities import (
    InvarianceResidual,
    eigen_residual,
    scaled_eigen_check,
    invariance_check,
    exponential_partner,
    invariant_product,
    invariant_product_check,
    reciprocal_identity_check,
)

__all__ = [
    'EigenEvaluation',
    'EigenfunctionEvaluator',
    'contracting_orbit',
    'eigen_product',
    'eigen_product_reindexed',
    'EigenSeriesResult',
    'eigen_series',
    'InvarianceResidual',
    'eigen_residual',
    'scaled_eigen_check',
    'invariance_check',
    'exponential_partner',
    'invariant_product',
    'invariant_product_check',
    'reciprocal_identity_check',
]
