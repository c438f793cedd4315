"""
Verification Package

Seeded property suites that check the deformed-calculus identities (Leibniz
and chain rules, inverse round trips, eigenfunction identities, the Mobius
factorisation and the classical limits) end to end.
"""

from .checks import CheckResult, relative_error, scaled_error
from .corpus import EXPRESSION_CORPUS, corpus_functions, random_operator, sample_point
from .suites import SUITES, Check
from .runner import run_suites, run_check, selected_checks, suite_names

__all__ = [
    'CheckResult',
    'relative_error',
    'scaled_error',
    'EXPRESSION_CORPUS',
    'corpus_functions',
    'random_operator',
    'sample_point',
    'SUITES',
    'Check',
    'run_suites',
    'run_check',
    'selected_checks',
    'suite_names',
]
