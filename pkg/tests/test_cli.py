"""Tests for the omega-calc command line, driven through src.app.main."""
import csv
import io
import json

import pytest

from src.app import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, exit_code, main
from src.errors import InvalidOperator, UsageError
from src.features.cli import (
    OutputRecord,
    RECORD_SCHEMA,
    cmd_verify,
    parse_op_spec,
    parse_sweep,
    read_records,
    validate_record,
)
from src.features.operator_core import Dilation, PowerDeformation, TwoParameter


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    monkeypatch.setenv("OMEGA_WORKERS", "1")
    monkeypatch.setenv("OMEGA_CALC_SEED", "0")
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    monkeypatch.setenv("DEBUG_MODE", "false")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def records_of(out):
    return read_records(out.splitlines())


def test_derive_example(capsys):
    code, out = run(capsys, "derive", "--op", "dilation:q=2", "--f", "x^2", "--x", "3")
    assert code == EXIT_OK
    [record] = records_of(out)
    assert record.command == "derive"
    assert record.value == pytest.approx(9.0, abs=1e-12)
    assert record.inputs == {"op": "dilation:q=2.0", "f": "x^2", "x": 3.0}
    assert record.diagnostics["singular"] is False


def test_mobius_example(capsys):
    code, out = run(capsys, "mobius", "--lambda", "0", "--q", "1", "--h", "0", "--x", "7")
    assert code == EXIT_OK
    [record] = records_of(out)
    assert record.value == 7.0
    assert record.diagnostics["determinant"] == 1.0
    assert record.diagnostics["operator_value"] == 7.0
    assert record.diagnostics["residual"] == 0.0


def test_apply_with_orbit(capsys):
    code, out = run(capsys, "apply", "--op", "dilation:q=0.5", "--x", "1", "--orbit", "3")
    assert code == EXIT_OK
    [record] = records_of(out)
    assert record.value == 0.5
    assert record.diagnostics["orbit"] == [1.0, 0.5, 0.25, 0.125]


def test_apply_inverse(capsys):
    _, out = run(capsys, "apply", "--op", "power:lambda=1,k=1", "--x", "0.5", "--inverse")
    assert records_of(out)[0].value == pytest.approx(1.0, abs=1e-15)


def test_inverse_derive(capsys):
    code, out = run(capsys, "inverse-derive", "--op", "dilation:q=0.5", "--f", "1", "--x", "1")
    assert code == EXIT_OK
    [record] = records_of(out)
    assert record.value == pytest.approx(1.0, abs=1e-12)
    assert record.diagnostics["converged"] is True


def test_bracket(capsys):
    _, out = run(capsys, "bracket", "--n", "2", "--lambda", "1", "--k", "1", "--x", "1")
    assert records_of(out)[0].value == pytest.approx(1.5, abs=1e-15)


@pytest.mark.parametrize("method", ["product", "series"])
def test_eigen_methods_agree(capsys, method):
    _, out = run(capsys, "eigen", "--op", "dilation:q=0.5", "--method", method, "--x", "0.1")
    [record] = records_of(out)
    expected = 1.0
    for j in range(60):
        expected /= 1 - 0.05 * 0.5 ** j
    assert record.value == pytest.approx(expected, abs=1e-6)


def test_eigen_reindexed_for_expanding_dilation(capsys):
    code, out = run(capsys, "eigen", "--op", "dilation:q=2", "--method", "reindexed", "--x", "0.3")
    assert code == EXIT_OK
    assert records_of(out)[0].diagnostics["form"] == "reindexed"


def test_eigen_not_converged(capsys):
    code, out = run(capsys, "eigen", "--op", "dilation:q=2", "--x", "0.3")
    assert code == EXIT_NUMERIC
    assert records_of(out)[0].value == "not_converged"


def test_missing_flag_is_a_usage_error(capsys):
    code, out = run(capsys, "derive", "--op", "dilation:q=2", "--x", "3")
    assert code == EXIT_USAGE
    [record] = records_of(out)
    assert record.value == "usage_error"
    assert record.command == "derive"


def test_point_and_sweep_are_exclusive(capsys):
    code, _ = run(capsys, "apply", "--op", "dilation:q=2", "--x", "1", "--sweep", "x=0:1:3")
    assert code == EXIT_USAGE


def test_invalid_operator_is_a_usage_error(capsys):
    code, out = run(capsys, "apply", "--op", "dilation:q=1", "--x", "1")
    assert code == EXIT_USAGE
    assert records_of(out)[0].value == "invalid_operator"


def test_domain_error_is_numeric(capsys):
    code, out = run(capsys, "apply", "--op", "power:lambda=-1,k=1", "--x", "1")
    assert code == EXIT_NUMERIC
    [record] = records_of(out)
    assert record.value == "domain_error"
    assert "error" in record.diagnostics


def test_parse_error_record_carries_offset(capsys):
    code, out = run(capsys, "derive", "--op", "dilation:q=2", "--f", "x +", "--x", "1")
    assert code == EXIT_NUMERIC
    [record] = records_of(out)
    assert record.value == "parse_error"
    assert record.diagnostics["offset"] == 3


def test_sweep_keeps_input_order(capsys):
    code, out = run(capsys, "apply", "--op", "translation:h=1", "--sweep", "x=0:1:5", "--workers", "3")
    assert code == EXIT_OK
    assert [r.value for r in records_of(out)] == [1.0, 1.25, 1.5, 1.75, 2.0]


def test_sweep_reports_each_failure(capsys):
    # 1 + x > 0 fails only at the first point
    code, out = run(capsys, "derive", "--op", "power:lambda=1,k=1", "--f", "x", "--sweep=x=-1:1:3")
    records = records_of(out)
    assert [r.value for r in records][0] == "domain_error"
    assert records[1].value == pytest.approx(1.0)
    assert code == EXIT_NUMERIC


def test_csv_output(capsys):
    _, out = run(capsys, "apply", "--op", "dilation:q=2", "--sweep", "x=1:2:2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(row["value"]) for row in rows] == [2.0, 4.0]
    assert rows[0]["inputs.op"] == "dilation:q=2.0"


def test_schema_command(capsys):
    code, out = run(capsys, "schema")
    assert code == EXIT_OK
    assert json.loads(out) == RECORD_SCHEMA


def test_records_validate(capsys):
    _, out = run(capsys, "mobius", "--lambda", "0.3", "--q", "2", "--h", "1", "--sweep", "x=0:1:4")
    for line in out.splitlines():
        assert validate_record(json.loads(line)) == []


def test_output_is_deterministic(capsys):
    argv = ("eigen", "--op", "dilation:q=0.5", "--sweep", "x=0.1:0.4:4", "--workers", "2")
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "expr", "--seed", "3")
    assert code == EXIT_OK
    records = records_of(out)
    summary = records[-1]
    assert summary.value == 0.0
    assert summary.diagnostics["passed"] is True
    assert all(r.inputs["seed"] == 3 for r in records)


def test_verify_unknown_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "nope")
    assert code == EXIT_USAGE
    assert records_of(out)[0].value == "usage_error"


def test_bad_config_is_reported(capsys, monkeypatch):
    monkeypatch.setenv("OMEGA_WORKERS", "0")
    code, out = run(capsys, "schema")
    assert code == EXIT_USAGE
    assert records_of(out)[0].command == "config"


def test_exit_code_precedence():
    ok = OutputRecord("apply", {}, 1.0)
    failed_check = OutputRecord("verify", {}, 1.0, {"passed": False})
    numeric = OutputRecord("apply", {}, "pole")
    usage = OutputRecord("apply", {}, "usage_error")
    assert exit_code([ok]) == EXIT_OK
    assert exit_code([ok, failed_check]) == EXIT_VERIFY_FAILED
    assert exit_code([failed_check, numeric]) == EXIT_NUMERIC
    assert exit_code([numeric, usage]) == EXIT_USAGE


def test_verify_summary_counts_failures():
    records = cmd_verify("mobius", seed=1)
    assert records[-1].value == float(len(records[-1].diagnostics["failed_checks"]))


def test_record_json_has_no_nan():
    record = OutputRecord("eigen", {"x": 0.3}, float("nan"), {"last_deviation": float("inf")})
    assert json.loads(record.to_json()) == {
        "command": "eigen",
        "inputs": {"x": 0.3},
        "value": None,
        "diagnostics": {"last_deviation": None},
    }


def test_parse_op_spec():
    assert parse_op_spec("dilation:q=0.5") == Dilation(0.5)
    assert parse_op_spec(" power:lambda=0.2, k=2") == PowerDeformation(0.2, 2)
    assert parse_op_spec("twoparam:mu=1,lambda=0.3") == TwoParameter(0.3, 1.0)


@pytest.mark.parametrize(
    "spec",
    ["dilation", "warp:q=2", "dilation:q", "dilation:q=2,q=3", "dilation:h=2", "power:lambda=0.2", "dilation:q=nan"],
)
def test_parse_op_spec_rejects(spec):
    with pytest.raises(UsageError):
        parse_op_spec(spec)


def test_parse_op_spec_checks_invariants():
    with pytest.raises(InvalidOperator):
        parse_op_spec("power:lambda=0.2,k=1.5")


def test_parse_sweep():
    assert parse_sweep("x=0:1:3") == [0.0, 0.5, 1.0]
    assert parse_sweep("x=2:2:1") == [2.0]
    for bad in ("y=0:1:3", "x=0:1", "x=0:1:0", "x=0:1:two"):
        with pytest.raises(UsageError):
            parse_sweep(bad)


@pytest.mark.parametrize(
    "data, fragment",
    [
        ({"command": "apply", "inputs": {}, "value": 1.0}, "'diagnostics' is a required property"),
        ({"command": "apply", "inputs": {}, "value": 1.0, "diagnostics": {}, "extra": 1}, "'extra'"),
        ({"command": 3, "inputs": {}, "value": 1.0, "diagnostics": {}}, "command: "),
        ({"command": "apply", "inputs": [], "value": 1.0, "diagnostics": {}}, "inputs: "),
        ({"command": "apply", "inputs": {}, "value": True, "diagnostics": {}}, "value: "),
        ([1, 2], "is not of type 'object'"),
    ],
)
def test_validate_record_reports_schema_violations(data, fragment):
    problems = validate_record(data)
    assert problems
    assert any(fragment in p for p in problems)


def test_read_records_rejects_invalid_lines():
    with pytest.raises(ValueError, match="required property"):
        read_records(['{"command":"apply","inputs":{},"value":1.0}'])


def test_overflowing_literal_gives_a_parse_error_record(capsys):
    code, out = run(capsys, "derive", "--op", "dilation:q=2", "--f", "sin(1e999)", "--x", "1")
    assert code == EXIT_NUMERIC
    [record] = records_of(out)
    assert record.value == "parse_error"
    assert record.diagnostics["offset"] == 4
