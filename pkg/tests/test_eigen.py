"""Tests for the omega-exponentials and their identities."""
import math

import numpy as np
import pytest

from src.errors import NotConverged, PoleError, SeriesDiverged
from src.features.calculus import RealFunction
from src.features.eigen import (
    EigenfunctionEvaluator,
    contracting_orbit,
    eigen_product,
    eigen_product_reindexed,
    eigen_residual,
    eigen_series,
    exponential_partner,
    invariance_check,
    invariant_product_check,
    reciprocal_identity_check,
    scaled_eigen_check,
)
from src.features.operator_core import Dilation, PowerDeformation, Translation


def brute_force_dilation_product(q: float, x: float, factors: int = 60) -> float:
    value = 1.0
    for j in range(factors):
        value /= 1 + (q - 1) * q ** j * x
    return value


def test_exponential_is_one_at_the_fixed_point():
    assert eigen_product(EigenfunctionEvaluator(Dilation(0.5)), 0.0) == 1.0
    assert eigen_product(EigenfunctionEvaluator(PowerDeformation(0.5, 1)), 0.0) == 1.0


@pytest.mark.parametrize("x", [0.1, 0.4, -0.3])
def test_dilation_product_matches_brute_force(x):
    ev = EigenfunctionEvaluator(Dilation(0.5))
    assert eigen_product(ev, x) == pytest.approx(brute_force_dilation_product(0.5, x), rel=1e-12)


def test_first_factor_pole():
    with pytest.raises(PoleError):
        eigen_product(EigenfunctionEvaluator(Dilation(0.5)), 2.0)


def test_expanding_orbit_does_not_converge():
    ev = EigenfunctionEvaluator(Dilation(2.0))
    evaluation = ev.evaluate(0.3)
    assert not evaluation.converged
    assert math.isnan(evaluation.value)
    with pytest.raises(NotConverged):
        eigen_product(ev, 0.3)


def test_max_factors_cut_is_reported():
    evaluation = EigenfunctionEvaluator(PowerDeformation(0.5, 1), max_factors=5).evaluate(0.3)
    assert not evaluation.converged
    assert evaluation.factors == 5


def test_contracting_orbit():
    assert contracting_orbit(Dilation(0.5), 1.0)
    assert contracting_orbit(Dilation(0.5), 0.0)
    assert not contracting_orbit(Dilation(2.0), 1.0)
    assert not contracting_orbit(Translation(0.5), 1.0)


def test_reindexed_product_solves_the_expanding_eigen_equation():
    ev = EigenfunctionEvaluator(Dilation(2.0))
    x = 0.3
    assert eigen_product_reindexed(ev, 2 * x) == pytest.approx((1 + x) * eigen_product_reindexed(ev, x), rel=1e-12)


def test_convergent_form_is_chosen_per_point():
    ev = EigenfunctionEvaluator(Dilation(2.0))
    assert ev.evaluate_convergent(0.3).method == "reindexed"
    assert EigenfunctionEvaluator(Dilation(0.5)).evaluate_convergent(0.3).method == "product"


def test_translation_exponential_closed_form():
    ev = EigenfunctionEvaluator(Translation(0.25))
    evaluation = ev.evaluate(1.0)
    assert evaluation.method == "closed_form"
    assert evaluation.value == pytest.approx(1.25 ** 4, rel=1e-14)
    assert eigen_product(ev, 0.75) / eigen_product(ev, 0.5) == pytest.approx(1.25, rel=1e-14)


def test_evaluator_rejects_bad_settings():
    with pytest.raises(ValueError):
        EigenfunctionEvaluator(Dilation(0.5), product_tol=0.0)
    with pytest.raises(ValueError):
        EigenfunctionEvaluator(Dilation(0.5), max_factors=0)


def test_series_first_iterate():
    result = eigen_series(Dilation(0.5), 1.0, j_max=1)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.terms == 1


def test_series_at_fixed_point():
    assert eigen_series(Dilation(0.5), 0.0).value == 1.0


@pytest.mark.parametrize("x", [0.05, 0.1, 0.2])
def test_series_matches_product(x):
    ev = EigenfunctionEvaluator(Dilation(0.5))
    assert eigen_series(Dilation(0.5), x, j_max=30).value == pytest.approx(eigen_product(ev, x), abs=1e-6)


def test_series_without_attractor_diverges():
    with pytest.raises(SeriesDiverged):
        eigen_series(Dilation(2.0), 1.0)
    with pytest.raises(ValueError):
        eigen_series(Dilation(0.5), 1.0, j_max=-1)


def test_eigen_residual_examples():
    assert eigen_residual(EigenfunctionEvaluator(Dilation(0.5)), 0.1) <= 1e-8
    assert eigen_residual(EigenfunctionEvaluator(Dilation(0.5)), 0.0) <= 1e-6
    assert eigen_residual(EigenfunctionEvaluator(Translation(0.5)), 0.0) <= 1e-8


@pytest.mark.parametrize("x", np.linspace(0.1, 0.5, 5))
def test_power_deformation_eigen_residual(x):
    ev = EigenfunctionEvaluator(PowerDeformation(0.5, 1), product_tol=1e-10)
    assert eigen_residual(ev, float(x)) <= 1e-6


def test_scaled_eigen_check():
    assert scaled_eigen_check(Dilation(0.5), 0.0, 0.3) == 0.0
    assert scaled_eigen_check(Dilation(0.5), 2.5, 0.3) <= 1e-12
    assert scaled_eigen_check(Dilation(0.5), -1.5, 0.2) <= 1e-12
    assert scaled_eigen_check(Dilation(2.0), 1.0, 0.3) <= 1e-12


def test_scaled_exponential_is_an_eigenfunction():
    ev = EigenfunctionEvaluator(Dilation(0.5), scale=2.0)
    assert eigen_residual(ev, 0.2) <= 1e-8


@pytest.mark.parametrize("q, x", [(0.5, 0.2), (0.7, -0.4), (2.0, 0.1)])
def test_reciprocal_identity(q, x):
    assert reciprocal_identity_check(q, x) <= 1e-12


@pytest.mark.parametrize(
    "op, x, product_tol",
    [
        (Dilation(0.5), 0.2, 1e-14),
        (Dilation(0.5), -0.3, 1e-14),
        (Dilation(2.0), 0.45, 1e-14),
        (Translation(0.5), 0.7, 1e-14),
        (PowerDeformation(0.5, 1), 0.1, 1e-10),
        (PowerDeformation(0.5, 1), 0.2, 1e-10),
        (PowerDeformation(0.5, 1), -0.3, 1e-10),
        (PowerDeformation(0.5, 2), 0.3, 1e-8),
        (PowerDeformation(0.5, 2), -0.3, 1e-8),
    ],
)
def test_exponential_pair_is_an_invariant(op, x, product_tol):
    residual = invariant_product_check(op, x, product_tol=product_tol)
    assert residual.worst <= 1e-6


@pytest.mark.parametrize("x", [0.1, 0.2, 0.4])
def test_partner_divides_by_the_step_factor(x):
    op = PowerDeformation(0.5, 1)
    partner = exponential_partner(op, product_tol=1e-10).as_function(auto=True)
    image = op.apply(x)
    assert partner(x) == pytest.approx((1 + image - x) * partner(image), rel=1e-8)


def test_periodic_function_is_a_translation_invariant():
    F = RealFunction(lambda y: math.sin(4 * math.pi * y), label="sin(4*pi*x)")
    for x in (0.0, 0.13, 0.71):
        assert invariance_check(Translation(0.5), F, x).worst <= 1e-12


def test_non_invariant_function_is_detected():
    residual = invariance_check(Dilation(0.5), RealFunction.of("x^2"), 1.0)
    assert residual.shift_residual == pytest.approx(0.75)
    assert residual.derivative_residual == pytest.approx(1.5)
