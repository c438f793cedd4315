"""
Property Suites
Seeded checks of the deformed-calculus identities, grouped into named suites

Each check receives its own generator and a CheckResult to fill in, so the
outcome does not depend on which other checks run or in what order.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from src.errors import EvalError, PoleError, SeriesDiverged
from src.features.calculus import (
    InverseConfig,
    RealFunction,
    bracket_number,
    constant,
    deformed_derivative,
    inverse_derivative_function,
    monomial,
)
from src.features.eigen import (
    EigenfunctionEvaluator,
    contracting_orbit,
    eigen_product,
    eigen_residual,
    eigen_series,
    invariance_check,
    invariant_product_check,
    reciprocal_identity_check,
    scaled_eigen_check,
)
from src.features.expr import parse, to_text
from src.features.mobius import MobiusMatrix, composite_matrix, factor_action_check, omega_matrix
from src.features.operator_core import (
    Dilation,
    PowerDeformation,
    Translation,
    TwoParameter,
    compose_same_family,
    orbit,
    two_parameter_mu_limit,
)

from .checks import CheckResult, relative_error, scaled_error
from .corpus import EXPRESSION_CORPUS, corpus_functions, operator_and_point, random_operator, sample_point


CheckBody = Callable[[np.random.Generator, CheckResult], None]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    tolerance: float
    body: CheckBody

    def run(self, rng: np.random.Generator) -> CheckResult:
        result = CheckResult(self.suite, self.name, self.tolerance)
        self.body(rng, result)
        return result


SUITES: Dict[str, List[Check]] = {}


def check(suite: str, tolerance: float) -> Callable[[CheckBody], CheckBody]:
    """Register the decorated function as a check of `suite`"""
    def register(body: CheckBody) -> CheckBody:
        SUITES.setdefault(suite, []).append(Check(suite, body.__name__, tolerance, body))
        return body
    return register


# ------------------------------------------------------------
# Operators
# ------------------------------------------------------------

@check("operators", tolerance=1.0)
def inverse_round_trip(rng, result):
    # error is measured in units of the allowed 4 ulps + 1e-14
    for _ in range(1000):
        op = random_operator(rng)
        x = sample_point(rng, op, -1.0, 1.0)
        if x is None:
            result.skip()
            continue
        y = op.apply(x)
        # near a domain edge the map is ill-conditioned and ulp bounds do not apply
        if abs(y - x) > 0.5 or not op.inverse().is_valid(y):
            result.skip()
            continue
        back = op.inverse_apply(y)
        result.record(abs(back - x) / (4 * math.ulp(abs(x)) + 1e-14), f"{op.describe()} x={x!r}")


@check("operators", tolerance=1e-12)
def power_group_law(rng, result):
    for _ in range(300):
        k = int(rng.integers(1, 4))
        inner = PowerDeformation(float(rng.uniform(-0.4, 0.4)), k)
        outer = PowerDeformation(float(rng.uniform(-0.4, 0.4)), k)

        def well_inside(v, inner=inner, outer=outer, k=k):
            return (
                1 + inner.lam * k * v ** k >= 0.2
                and 1 + (inner.lam + outer.lam) * k * v ** k >= 0.2
                and outer.is_valid(inner.apply(v))
            )

        x = sample_point(rng, inner, accept=well_inside)
        if x is None:
            result.skip()
            continue
        step_by_step = outer.apply(inner.apply(x))
        composite = compose_same_family(outer, inner).apply(x)
        result.record(scaled_error(composite, step_by_step), f"{outer.describe()} o {inner.describe()} x={x!r}")


def _same_family_pair(rng, family: int):
    if family == 0:
        return Translation(float(rng.uniform(-1.0, 1.0))), Translation(float(rng.uniform(-1.0, 1.0)))
    if family == 1:
        outer, inner = float(rng.uniform(0.2, 3.0)), float(rng.uniform(0.2, 3.0))
        if abs(outer * inner - 1.0) < 1e-3:
            return None
        return Dilation(outer), Dilation(inner)
    mu = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 2.0))
    return TwoParameter(float(rng.uniform(-0.4, 0.4)), mu), TwoParameter(float(rng.uniform(-0.4, 0.4)), mu)


@check("operators", tolerance=1e-12)
def closed_form_group_law(rng, result):
    for _ in range(300):
        family = int(rng.integers(3))
        pair = _same_family_pair(rng, family)
        if pair is None:
            result.skip()
            continue
        outer, inner = pair
        composite = compose_same_family(outer, inner)

        def well_inside(v, inner=inner, outer=outer, composite=composite):
            if not (composite.is_valid(v) and outer.is_valid(inner.apply(v))):
                return False
            if isinstance(inner, TwoParameter):
                return all(1 + op.lam * op.mu * math.exp(-op.mu * v) >= 0.2 for op in (inner, composite))
            return True

        x = sample_point(rng, inner, accept=well_inside)
        if x is None:
            result.skip()
            continue
        step_by_step = outer.apply(inner.apply(x))
        result.record(scaled_error(composite.apply(x), step_by_step), f"{outer.describe()} o {inner.describe()} x={x!r}")


@check("operators", tolerance=1e-8)
def power_identity_limit(rng, result):
    for k in (1, 2, 3):
        op = PowerDeformation(1e-9, k)
        for x in np.linspace(-2.0, 2.0, 41):
            x = float(x)
            if not op.is_valid(x):
                result.skip()
                continue
            result.record(abs(op.apply(x) - x) / (1.0 + abs(x)), f"k={k} x={x!r}")


@check("operators", tolerance=1e-12)
def power_orbit_consistency(rng, result):
    for _ in range(100):
        lam = float(rng.uniform(0.05, 0.4))
        k = int(rng.integers(1, 4))
        x = float(rng.uniform(0.1, 1.0))
        j = int(rng.integers(1, 11))
        points = orbit(PowerDeformation(lam, k), x, j)
        result.record(scaled_error(points[j], PowerDeformation(j * lam, k).apply(x)), f"lambda={lam!r} k={k} j={j}")


@check("operators", tolerance=1e-12)
def two_parameter_log_form(rng, result):
    for _ in range(200):
        op = TwoParameter(float(rng.uniform(-0.5, 0.5)), float(rng.choice([-1, 1]) * rng.uniform(0.2, 1.5)))
        x = sample_point(rng, op, accept=lambda v, op=op: abs(op.apply(v) - v) <= 0.5)
        if x is None:
            result.skip()
            continue
        result.record(scaled_error(op.apply_log_form(x), op.apply(x)), f"{op.describe()} x={x!r}")


# ------------------------------------------------------------
# Derivative axioms and specialisations
# ------------------------------------------------------------

AXIOM_OPERATORS = (Translation(0.3), Dilation(0.6), PowerDeformation(0.3, 2), TwoParameter(0.4, 0.8))


@check("axioms", tolerance=1e-14)
def derivative_of_identity_and_constant(rng, result):
    identity = monomial(1)
    c = constant(2.5)
    for op in AXIOM_OPERATORS:
        for _ in range(20):
            x = sample_point(rng, op, -1.0, 1.0)
            if x is None:
                result.skip()
                continue
            result.record(abs(deformed_derivative(op, identity, x) - 1.0), f"D x under {op.describe()} at {x!r}")
            result.record(abs(deformed_derivative(op, c, x)), f"D c under {op.describe()} at {x!r}")


@check("axioms", tolerance=1e-11)
def dilation_monomials(rng, result):
    for q in (0.3, 0.7, 1.5):
        op = Dilation(q)
        for n in range(9):
            for _ in range(5):
                x = float(rng.uniform(0.2, 2.0)) * float(rng.choice([-1, 1]))
                expected = (q ** n - 1) / (q - 1) * x ** (n - 1) if n else 0.0
                actual = deformed_derivative(op, monomial(n), x)
                result.record(relative_error(actual, expected), f"q={q} n={n} x={x!r}")


@check("axioms", tolerance=1e-11)
def power_bracket_numbers(rng, result):
    for k in (1, 2, 3):
        for lam in (-0.2, 0.2, 0.5):
            op = PowerDeformation(lam, k)
            for n in range(1, 7):
                for _ in range(4):
                    x = sample_point(rng, op, 0.3, 1.5)
                    if x is None:
                        result.skip()
                        continue
                    expected = bracket_number(n, lam, k, x) * x ** (n - 1)
                    actual = deformed_derivative(op, monomial(n), x)
                    result.record(relative_error(actual, expected), f"lambda={lam} k={k} n={n} x={x!r}")


# ------------------------------------------------------------
# Leibniz and chain rules
# ------------------------------------------------------------

LEIBNIZ_MIN_STEP = 0.1


def _leibniz_case(rng, functions, min_step: float = 1e-3):
    op, x = operator_and_point(rng, min_step)
    f = functions[int(rng.integers(len(functions)))]
    g = functions[int(rng.integers(len(functions)))]
    return op, x, f, g


def _leibniz(rng, result, second_form: bool):
    functions = corpus_functions()
    for _ in range(500):
        # |omega(x) - x| >= LEIBNIZ_MIN_STEP and |omega(x)| <= 1.5 bound the rounding of both quotients
        op, x, f, g = _leibniz_case(rng, functions, LEIBNIZ_MIN_STEP)
        if x is None or abs(op.apply(x)) > 1.5:
            result.skip()
            continue
        try:
            image = op.apply(x)
            lhs = deformed_derivative(op, f.times(g), x)
            if second_form:
                rhs = f(x) * deformed_derivative(op, g, x) + deformed_derivative(op, f, x) * g(image)
            else:
                rhs = deformed_derivative(op, f, x) * g(x) + f(image) * deformed_derivative(op, g, x)
        except EvalError:
            result.skip()
            continue
        result.record(scaled_error(rhs, lhs), f"{op.describe()} f={f.label} g={g.label} x={x!r}")


@check("leibniz", tolerance=1e-10)
def leibniz_shift_on_left_factor(rng, result):
    _leibniz(rng, result, second_form=False)


@check("leibniz", tolerance=1e-10)
def leibniz_shift_on_right_factor(rng, result):
    _leibniz(rng, result, second_form=True)


@check("chain", tolerance=1e-12)
def chain_rule_quotient(rng, result):
    functions = corpus_functions()
    for _ in range(500):
        op, x, f, g = _leibniz_case(rng, functions)
        if x is None:
            result.skip()
            continue
        try:
            image = op.apply(x)
            inner_step = g(image) - g(x)
            if abs(inner_step) <= 1e-12 * max(1.0, abs(g(x))):
                result.skip()
                continue
            outer = (f(g(image)) - f(g(x))) / inner_step
            lhs = deformed_derivative(op, f.compose(g), x)
            rhs = outer * deformed_derivative(op, g, x)
        except EvalError:
            result.skip()
            continue
        result.record(scaled_error(rhs, lhs), f"{op.describe()} f={f.label} g={g.label} x={x!r}")


# ------------------------------------------------------------
# Inverse derivative
# ------------------------------------------------------------

@check("inverse", tolerance=1e-8)
def derivative_of_inverse(rng, result):
    operators = (Dilation(0.3), Dilation(0.5), Dilation(0.7), PowerDeformation(0.25, 1), PowerDeformation(0.5, 1))
    for op in operators:
        for n in range(7):
            f = monomial(n)
            antiderivative = inverse_derivative_function(op, f)
            for x in (0.25, 0.5, 1.0):
                try:
                    actual = deformed_derivative(op, antiderivative, x)
                except SeriesDiverged:
                    result.record(math.inf, f"{op.describe()} n={n} x={x} diverged")
                    continue
                result.record(scaled_error(actual, f(x)), f"{op.describe()} n={n} x={x}")


@check("inverse", tolerance=0.0)
def expanding_dilation_diverges(rng, result):
    f = monomial(2)
    for q, x in ((2.0, 1.0), (3.0, 0.5), (1.5, -2.0)):
        antiderivative = inverse_derivative_function(Dilation(q), f)
        try:
            antiderivative(x)
            diverged = False
        except SeriesDiverged:
            diverged = True
        result.expect(diverged, f"q={q} x={x} converged")


# ------------------------------------------------------------
# Eigenfunctions
# ------------------------------------------------------------

EIGEN_OPERATORS = (
    (EigenfunctionEvaluator(Dilation(0.3)), -0.5, 0.5),
    (EigenfunctionEvaluator(Dilation(0.7)), -0.5, 0.5),
    (EigenfunctionEvaluator(Translation(0.25)), -1.0, 1.0),
    (EigenfunctionEvaluator(PowerDeformation(0.5, 1), product_tol=1e-10), -0.5, 0.5),
)


def contraction_region(ev: EigenfunctionEvaluator, low: float, high: float, count: int = 10) -> List[float]:
    """
    Up to `count` points of [low, high] where the forward product converges

    Translations use their closed form, so every point qualifies.
    """
    candidates = [float(x) for x in np.linspace(low, high, 2 * count)]
    if isinstance(ev.op, Translation):
        return candidates[::2]
    inside = [x for x in candidates if ev.op.is_valid(x) and contracting_orbit(ev.op, x)]
    if len(inside) <= count:
        return inside
    return [inside[i] for i in np.linspace(0, len(inside) - 1, count).round().astype(int)]


@check("eigen", tolerance=1e-6)
def eigen_equation_residual(rng, result):
    for ev, low, high in EIGEN_OPERATORS:
        region = contraction_region(ev, low, high)
        if not region:
            result.skip()
        for x in region:
            result.record(eigen_residual(ev, x), f"{ev.op.describe()} x={x!r}")


@check("eigen", tolerance=1e-5)
def product_matches_series(rng, result):
    cases = (
        (Dilation(0.5), (0.05, 0.1, 0.2), 1e-14, InverseConfig()),
        (Dilation(0.3), (0.1, 0.3), 1e-14, InverseConfig()),
        (PowerDeformation(0.5, 1), (0.1, 0.2), 1e-10, InverseConfig(tail_tol=1e-9)),
    )
    for op, points, product_tol, cfg in cases:
        ev = EigenfunctionEvaluator(op, product_tol=product_tol)
        for x in points:
            series = eigen_series(op, x, cfg, j_max=30)
            result.record(abs(eigen_product(ev, x) - series.value), f"{op.describe()} x={x}")


@check("eigen", tolerance=1e-8)
def scaled_eigenvalue_relation(rng, result):
    for h in (0.25, 0.5):
        for x in (0.0, 0.3, -0.7):
            result.record(scaled_eigen_check(Translation(h), 1.0, x), f"translation h={h} x={x}")
    for mu in (0.0, 0.5, 1.0, 2.0):
        result.record(scaled_eigen_check(Dilation(0.5), mu, 0.1), f"dilation q=0.5 mu={mu}")


@check("eigen", tolerance=1e-6)
def reciprocal_dilation_exponential(rng, result):
    for q in (0.5, 2.0):
        for x in (0.05, 0.1):
            result.record(reciprocal_identity_check(q, x), f"q={q} x={x}")


@check("eigen", tolerance=1e-6)
def exponential_pair_is_invariant(rng, result):
    cases = (
        (Dilation(0.5), (0.0, 0.05, 0.1), 1e-14),
        (Dilation(2.0), (0.2, -0.4), 1e-14),
        (Translation(0.25), (-0.6, 0.3), 1e-14),
        (PowerDeformation(0.5, 1), (0.1, 0.2, -0.3), 1e-10),
        (PowerDeformation(0.5, 2), (0.3, -0.4), 1e-8),
    )
    for op, points, product_tol in cases:
        for x in points:
            residual = invariant_product_check(op, x, product_tol=product_tol)
            result.record(residual.worst, f"{op.describe()} x={x}")


@check("eigen", tolerance=1e-12)
def periodic_function_is_translation_invariant(rng, result):
    op = Translation(0.5)
    periodic = RealFunction.of("sin(12.566370614359172*x)")
    for x in rng.uniform(-1.0, 1.0, 10):
        result.record(invariance_check(op, periodic, float(x)).worst, f"x={x!r}")


# ------------------------------------------------------------
# Mobius factorisation
# ------------------------------------------------------------

def _mobius_parameters(rng):
    return float(rng.uniform(-1.0, 1.0)), float(rng.uniform(0.2, 3.0)), float(rng.uniform(-1.0, 1.0))


@check("mobius", tolerance=1e-12)
def composite_entries(rng, result):
    for _ in range(200):
        lam, q, h = _mobius_parameters(rng)
        m = composite_matrix(lam, q, h)
        root = math.sqrt(q)
        expected = (root, root * h, root * lam, root * lam * h + 1 / root)
        error = max(scaled_error(a, b) for a, b in zip(m.as_tuple(), expected))
        result.record(error, f"lambda={lam!r} q={q!r} h={h!r}")
        result.record(abs(m.determinant - 1.0), f"det at lambda={lam!r} q={q!r} h={h!r}")


@check("mobius", tolerance=1e-12)
def matrix_action_matches_operators(rng, result):
    for _ in range(200):
        lam, q, h = _mobius_parameters(rng)
        x = float(rng.uniform(-1.0, 1.0))
        # stay clear of the pole and of the deformation's domain edge
        if 1.0 + lam * q * (x + h) < 0.5:
            result.skip()
            continue
        result.record(factor_action_check(lam, q, h, x), f"lambda={lam!r} q={q!r} h={h!r} x={x!r}")


@check("mobius", tolerance=1e-12)
def omega_matrices_compose_additively(rng, result):
    for _ in range(200):
        lam, mu = float(rng.uniform(-0.5, 0.5)), float(rng.uniform(-0.5, 0.5))
        x = float(rng.uniform(-1.0, 1.0))
        via_matrix = (omega_matrix(lam) @ omega_matrix(mu)).act(x)
        via_operator = PowerDeformation(lam + mu, 1).apply(x)
        result.record(scaled_error(via_matrix, via_operator), f"lambda={lam!r} mu={mu!r} x={x!r}")


@check("mobius", tolerance=1e-12)
def action_is_a_group_action(rng, result):
    for _ in range(200):
        m1 = MobiusMatrix(*(float(v) for v in rng.uniform(-2.0, 2.0, 4)))
        m2 = MobiusMatrix(*(float(v) for v in rng.uniform(-2.0, 2.0, 4)))
        x = float(rng.uniform(-2.0, 2.0))
        if abs(m2.c * x + m2.d) < 0.25 or abs(m1.c * m2.act(x) + m1.d) < 0.25:
            result.skip()
            continue
        if abs(m1.determinant) < 0.1 or abs(m2.determinant) < 0.1:
            result.skip()
            continue
        result.record(scaled_error((m1 @ m2).act(x), m1.act(m2.act(x))), f"x={x!r}")


@check("mobius", tolerance=0.0)
def factor_order_matters(rng, result):
    witnessed = False
    for _ in range(20):
        lam, q, h = _mobius_parameters(rng)
        x = float(rng.uniform(-1.0, 1.0))
        forward = omega_matrix(lam) @ composite_matrix(0.0, q, h)
        backward = composite_matrix(0.0, 1.0, h) @ composite_matrix(0.0, q, 0.0) @ omega_matrix(lam)
        try:
            if abs(forward.act(x) - backward.act(x)) > 1e-6:
                witnessed = True
                break
        except PoleError:
            continue
    result.expect(witnessed, "H.Q.Omega agreed with Omega.Q.H on every sample")


# ------------------------------------------------------------
# Limits
# ------------------------------------------------------------

def _halving_ratios(errors: List[float]) -> List[float]:
    return [before / after for before, after in zip(errors, errors[1:])]


@check("limits", tolerance=0.0)
def classical_limit_is_linear_in_lambda(rng, result):
    cases = (("exp(x)", math.exp, 1.0, 1), ("sin(x)", math.cos, 0.8, 1), ("exp(x)", math.exp, 0.7, 2))
    for text, derivative, x, k in cases:
        f = RealFunction.of(text)
        errors = [
            abs(deformed_derivative(PowerDeformation(lam, k), f, x) - derivative(x))
            for lam in (1e-4, 5e-5, 2.5e-5)
        ]
        for ratio in _halving_ratios(errors):
            result.expect(1.5 <= ratio <= 2.5, f"{text} k={k} x={x}: ratio {ratio:.3f}")


@check("limits", tolerance=0.0)
def mu_limit_is_linear_in_mu(rng, result):
    lam, x = 0.7, 1.0
    limit = two_parameter_mu_limit(lam, x)
    errors = [abs(TwoParameter(lam, mu).apply(x) - limit) for mu in (1e-3, 5e-4, 2.5e-4)]
    for ratio in _halving_ratios(errors):
        result.expect(1.5 <= ratio <= 2.5, f"ratio {ratio:.3f}")


@check("limits", tolerance=1e-5)
def small_mu_matches_shift(rng, result):
    result.record(abs(TwoParameter(0.7, 1e-6).apply(1.0) - 1.7), "mu=1e-6")
    result.record(abs(two_parameter_mu_limit(0.7, 1.0) - 1.7), "mu limit")


# ------------------------------------------------------------
# Expressions
# ------------------------------------------------------------

@check("expr", tolerance=0.0)
def precedence_and_associativity(rng, result):
    for text, x, expected in (("2+3*4", 0.0, 14.0), ("2^3^2", 0.0, 512.0), ("-x^2", 3.0, -9.0), ("x^2", 3.0, 9.0)):
        result.record(abs(parse(text).evaluate(x) - expected), text)


@check("expr", tolerance=0.0)
def print_and_reparse(rng, result):
    points = [float(v) for v in rng.uniform(-1.5, 1.5, 100)]
    for text in EXPRESSION_CORPUS:
        tree = parse(text)
        again = parse(to_text(tree))
        result.expect(all(tree.evaluate(x) == again.evaluate(x) for x in points), text)
