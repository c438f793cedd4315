"""Tests for the deformed derivative, its inverse series and the bracket numbers."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import DomainError, EvalError, InvalidOperator, SeriesDiverged
from src.features.calculus import (
    DerivativeConfig,
    InverseConfig,
    RealFunction,
    bracket_number,
    bracket_ratio,
    classical_derivative,
    constant,
    deformed_derivative,
    inverse_derivative,
    inverse_derivative_function,
    inverse_derivative_series,
    monomial,
)
from src.features.operator_core import Dilation, PowerDeformation, Translation, TwoParameter

SQUARE = RealFunction.of("x^2")


def test_derivative_examples():
    assert deformed_derivative(Dilation(2), SQUARE, 3.0) == pytest.approx(9.0, abs=1e-12)
    assert deformed_derivative(Translation(0.5), SQUARE, 1.0) == pytest.approx(2.5, abs=1e-12)
    assert deformed_derivative(PowerDeformation(1, 1), SQUARE, 1.0) == pytest.approx(1.5, abs=1e-12)


@pytest.mark.parametrize(
    "op, x",
    [(Dilation(0.5), 0.7), (Translation(-0.3), 2.0), (PowerDeformation(0.4, 2), 0.9), (TwoParameter(0.2, 1.5), -0.4)],
)
def test_derivative_of_constant_and_identity(op, x):
    assert deformed_derivative(op, constant(4.2), x) == 0.0
    assert deformed_derivative(op, RealFunction.of("x"), x) == pytest.approx(1.0, abs=1e-12)


def test_singular_point_uses_analytic_derivative():
    # 0 is a fixed point of every dilation
    assert deformed_derivative(Dilation(0.5), monomial(3), 0.0) == 0.0
    assert deformed_derivative(Dilation(0.5), RealFunction(math.sin, derivative=math.cos), 0.0) == 1.0


def test_singular_point_falls_back_to_central_difference():
    value = deformed_derivative(Dilation(0.5), RealFunction.of("exp(x)"), 0.0)
    assert value == pytest.approx(1.0, abs=1e-6)


def test_classical_derivative():
    assert classical_derivative(monomial(2), 3.0) == 6.0
    assert classical_derivative(RealFunction.of("sin(x)"), 0.0, DerivativeConfig(fd_step=1e-5)) == pytest.approx(1.0, abs=1e-8)


def test_derivative_outside_domain():
    with pytest.raises(DomainError):
        deformed_derivative(PowerDeformation(-1, 1), SQUARE, 1.0)
    with pytest.raises(EvalError):
        deformed_derivative(Translation(1.0), RealFunction.of("ln(x)"), -2.0)


def test_config_rejects_non_positive_values():
    with pytest.raises(ValueError):
        DerivativeConfig(singular_eps=0.0)
    with pytest.raises(ValueError):
        InverseConfig(max_terms=0)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_dilation_monomials_give_q_numbers(n):
    q, x = 0.5, 0.8
    q_number = (q ** n - 1) / (q - 1)
    assert deformed_derivative(Dilation(q), monomial(n), x) == pytest.approx(q_number * x ** (n - 1), rel=1e-12)


def test_bracket_examples():
    assert bracket_number(1, 0.7, 2, 0.4) == 1.0
    assert bracket_number(2, 1.0, 1, 1.0) == pytest.approx(1.5, abs=1e-15)
    assert bracket_number(3, 0.0, 1, 123.0) == 3.0
    assert bracket_number(0, 0.5, 1, 1.0) == 0.0


def test_bracket_matches_derivative_of_square():
    assert bracket_number(2, 1.0, 1, 1.0) * 1.0 == pytest.approx(deformed_derivative(PowerDeformation(1, 1), SQUARE, 1.0))


@settings(max_examples=100, deadline=None)
@given(lam=st.floats(-0.3, 0.3), k=st.integers(1, 3), x=st.floats(0.2, 1.0), n=st.integers(1, 6))
def test_bracket_matches_power_deformation_of_monomials(lam, k, x, n):
    op = PowerDeformation(lam, k)
    if abs(op.apply(x) - x) < 1e-6:
        return
    expected = bracket_number(n, lam, k, x) * x ** (n - 1)
    assert deformed_derivative(op, monomial(n), x) == pytest.approx(expected, rel=1e-7, abs=1e-9)


def test_bracket_rejects_bad_inputs():
    with pytest.raises(InvalidOperator):
        bracket_number(-1, 0.5, 1, 1.0)
    with pytest.raises(InvalidOperator):
        bracket_number(2, 0.5, 0, 1.0)
    with pytest.raises(DomainError):
        bracket_ratio(-1.0, 1, 1.0)


def test_inverse_derivative_of_one_under_dilation():
    assert inverse_derivative(Dilation(0.5), constant(1.0), 1.0) == pytest.approx(1.0, abs=1e-12)


def test_inverse_derivative_diverges_on_expanding_orbit():
    with pytest.raises(SeriesDiverged):
        inverse_derivative(Dilation(2), SQUARE, 1.0)


def test_inverse_derivative_without_acceleration():
    cfg = InverseConfig(accelerate=False)
    result = inverse_derivative_series(Dilation(0.5), monomial(2), 1.0, cfg)
    assert not result.accelerated
    # sum_j (q^j - q^{j+1}) q^{2j} = (1 - q) / (1 - q^3)
    assert result.value == pytest.approx(0.5 / 0.875, abs=1e-12)


@pytest.mark.parametrize(
    "op, text, x",
    [
        (Dilation(0.5), "x^2", 0.9),
        (Dilation(0.8), "cos(2*x)", 0.6),
        (PowerDeformation(0.5, 1), "exp(x)", 0.4),
        (PowerDeformation(0.8, 1), "sin(x)", 0.8),
    ],
)
def test_derivative_inverts_inverse_derivative(op, text, x):
    f = RealFunction.of(text)
    antiderivative = inverse_derivative_function(op, f)
    assert deformed_derivative(op, antiderivative, x) == pytest.approx(f(x), abs=1e-8)


def test_inverse_series_reports_terms():
    result = inverse_derivative_series(Dilation(0.5), RealFunction.of("exp(x)"), 0.5)
    assert result.terms > 1
    assert result.accelerated
    assert result.last_increment <= 1e-12 * (1 + abs(result.value))


def test_real_function_helpers():
    f = RealFunction.of("x + 1")
    g = RealFunction.of("x^2")
    assert f.times(g)(2.0) == 12.0
    assert f.compose(g)(2.0) == 5.0
    assert g.under(Dilation(0.5))(4.0) == 4.0
    assert RealFunction.of(math.cos).label == "cos"
