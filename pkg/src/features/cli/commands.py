"""
Command Implementations
One function per subcommand; each takes parsed arguments and returns
OutputRecords, turning library errors into error records
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.config import EigenSettings
from src.errors import NotConverged, OmegaCalcError
from src.features.calculus import (
    DerivativeConfig,
    InverseConfig,
    RealFunction,
    bracket_ratio,
    bracket_number,
    deformed_derivative,
    inverse_derivative_series,
)
from src.features.eigen import EigenfunctionEvaluator, eigen_series
from src.features.mobius import composite_matrix, operator_composition
from src.features.operator_core import OmegaOperator, orbit
from src.features.verification import run_suites

from .records import OutputRecord, error_record

logger = logging.getLogger(__name__)

EIGEN_METHODS = ("product", "reindexed", "series")


def guarded(command: str, inputs: Dict[str, Any], compute: Callable[[], OutputRecord]) -> OutputRecord:
    """Run compute, converting any library error into an error record"""
    try:
        return compute()
    except OmegaCalcError as e:
        logger.warning("%s failed (%s): %s", command, e.tag, e)
        return error_record(command, inputs, e)


def sweep(
    points: Sequence[float],
    point_command: Callable[[float], OutputRecord],
    workers: int = 1,
) -> List[OutputRecord]:
    """
    Evaluate a pointwise command at every point

    Records come back in input order whatever the worker count.
    """
    if workers <= 1 or len(points) <= 1:
        return [point_command(x) for x in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(point_command, points))


def cmd_apply(op: OmegaOperator, x: float, inverse: bool = False, orbit_steps: Optional[int] = None) -> OutputRecord:
    """omega(x), or its inverse, optionally with the first orbit points"""
    inputs = {"op": op.describe(), "x": x, "inverse": inverse}

    def compute() -> OutputRecord:
        value = op.inverse_apply(x) if inverse else op.apply(x)
        diagnostics: Dict[str, Any] = {"domain_valid": True}
        if orbit_steps is not None:
            points = orbit(op.inverse() if inverse else op, x, orbit_steps)
            diagnostics["orbit"] = points.points
            diagnostics["orbit_complete"] = points.complete
        return OutputRecord("apply", inputs, value, diagnostics)

    return guarded("apply", inputs, compute)


def cmd_derive(op: OmegaOperator, f: RealFunction, x: float, cfg: DerivativeConfig) -> OutputRecord:
    inputs = {"op": op.describe(), "f": f.label, "x": x}

    def compute() -> OutputRecord:
        image = op.apply(x)
        value = deformed_derivative(op, f, x, cfg)
        diagnostics = {"omega_x": image, "singular": abs(image - x) < cfg.singular_eps}
        return OutputRecord("derive", inputs, value, diagnostics)

    return guarded("derive", inputs, compute)


def cmd_inverse_derive(op: OmegaOperator, f: RealFunction, x: float, cfg: InverseConfig) -> OutputRecord:
    inputs = {"op": op.describe(), "f": f.label, "x": x}

    def compute() -> OutputRecord:
        result = inverse_derivative_series(op, f, x, cfg)
        diagnostics = {
            "converged": True,
            "terms": result.terms,
            "last_increment": result.last_increment,
            "accelerated": result.accelerated,
        }
        return OutputRecord("inverse-derive", inputs, result.value, diagnostics)

    return guarded("inverse-derive", inputs, compute)


def cmd_eigen(
    op: OmegaOperator,
    x: float,
    method: str,
    settings: EigenSettings,
    cfg: InverseConfig,
    j_max: int = 30,
    scale: float = 1.0,
) -> OutputRecord:
    """Omega-exponential at x by product, reindexed product or series"""
    inputs = {"op": op.describe(), "x": x, "method": method, "scale": scale}

    def compute() -> OutputRecord:
        if method == "series":
            if scale != 1.0:
                raise NotConverged("the series form is only available for eigenvalue 1")
            result = eigen_series(op, x, cfg, j_max)
            diagnostics = {
                "converged": True,
                "terms": result.terms,
                "last_term": result.last_term,
                "orbit_length": result.orbit_length,
            }
            return OutputRecord("eigen", inputs, result.value, diagnostics)

        ev = EigenfunctionEvaluator(op, settings.product_tol, settings.max_factors, scale)
        evaluation = ev.evaluate_reindexed(x) if method == "reindexed" else ev.evaluate(x)
        if not evaluation.converged:
            raise NotConverged(
                f"{evaluation.method} for {op.describe()} at x={x!r} did not converge "
                f"after {evaluation.factors} factors"
            )
        diagnostics = {
            "converged": True,
            "factors": evaluation.factors,
            "last_deviation": evaluation.last_deviation,
            "form": evaluation.method,
        }
        return OutputRecord("eigen", inputs, evaluation.value, diagnostics)

    return guarded("eigen", inputs, compute)


def cmd_bracket(n: int, lam: float, k: int, x: float) -> OutputRecord:
    inputs = {"n": n, "lambda": lam, "k": k, "x": x}

    def compute() -> OutputRecord:
        value = bracket_number(n, lam, k, x)
        return OutputRecord("bracket", inputs, value, {"ratio": bracket_ratio(lam, k, x)})

    return guarded("bracket", inputs, compute)


def cmd_mobius(lam: float, q: float, h: float, x: float) -> OutputRecord:
    """Composite matrix action at x next to the operator composition it factorises"""
    inputs = {"lambda": lam, "q": q, "h": h, "x": x}

    def compute() -> OutputRecord:
        m = composite_matrix(lam, q, h)
        value = m.act(x)
        via_operators = operator_composition(lam, q, h, x)
        diagnostics = {
            "matrix": list(m.as_tuple()),
            "determinant": m.determinant,
            "operator_value": via_operators,
            "residual": abs(value - via_operators),
        }
        return OutputRecord("mobius", inputs, value, diagnostics)

    return guarded("mobius", inputs, compute)


def cmd_verify(suite: str, seed: int, workers: int = 1) -> List[OutputRecord]:
    """
    Run property suites; one record per check and a closing summary

    The summary's value is the number of failed checks.
    """
    records = []
    results = run_suites(suite, seed, workers)
    for result in results:
        inputs = {"suite": result.suite, "check": result.name, "seed": seed}
        diagnostics = {
            "passed": result.passed,
            "cases": result.cases,
            "failures": result.failures,
            "skipped": result.skipped,
            "tolerance": result.tolerance,
            "examples": result.examples,
        }
        records.append(OutputRecord("verify", inputs, result.max_error, diagnostics))
    failed = [r for r in results if not r.passed]
    summary = {"checks": len(results), "failed_checks": [f"{r.suite}.{r.name}" for r in failed], "passed": not failed}
    records.append(OutputRecord("verify", {"suite": suite, "seed": seed}, float(len(failed)), summary))
    return records
