"""
Command-Line Operator and Sweep Specs
Parses `kind:name=value,...` operator specs and `x=a:b:n` sweep specs
"""
import math
from typing import Dict, List

import numpy as np

from src.errors import UsageError
from src.features.operator_core import OmegaOperator, OperatorKind, make_operator

PARAMETER_NAMES = {
    OperatorKind.TRANSLATION: ("h",),
    OperatorKind.DILATION: ("q",),
    OperatorKind.POWER: ("lambda", "k"),
    OperatorKind.TWO_PARAMETER: ("lambda", "mu"),
}

OP_SPEC_HELP = "translation:h=<r> | dilation:q=<r> | power:lambda=<r>,k=<int> | twoparam:lambda=<r>,mu=<r>"


def parse_number(text: str, what: str) -> float:
    """
    Parse a finite real number from a flag value

    Raises:
        UsageError: If text is not a finite number
    """
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"{what} must be a number, got {text!r}")
    if not math.isfinite(value):
        raise UsageError(f"{what} must be finite, got {text!r}")
    return value


def parse_op_spec(text: str) -> OmegaOperator:
    """
    Build an operator from its command-line spec

    Args:
        text: Spec such as 'dilation:q=0.5' or 'power:lambda=0.2,k=2'

    Returns:
        The operator

    Raises:
        UsageError: If the spec is malformed or names the wrong parameters
        InvalidOperator: If the parameters violate an operator invariant
    """
    kind_text, sep, body = text.strip().partition(":")
    if not sep:
        raise UsageError(f"operator spec {text!r} must look like {OP_SPEC_HELP}")
    try:
        kind = OperatorKind(kind_text.strip())
    except ValueError:
        raise UsageError(f"unknown operator kind {kind_text!r}; expected {OP_SPEC_HELP}")

    params: Dict[str, float] = {}
    for part in body.split(","):
        name, eq, raw = part.partition("=")
        name = name.strip()
        if not eq or not name:
            raise UsageError(f"operator parameter {part!r} must be name=value")
        if name in params:
            raise UsageError(f"operator parameter {name!r} given twice")
        params[name] = parse_number(raw.strip(), name)

    expected = PARAMETER_NAMES[kind]
    if set(params) != set(expected):
        raise UsageError(f"{kind.value} takes parameters {', '.join(expected)}, got {', '.join(params) or 'none'}")
    return make_operator(kind, params)


def parse_sweep(text: str) -> List[float]:
    """
    Expand 'x=a:b:n' into n evenly spaced points from a to b inclusive

    Raises:
        UsageError: If the spec is malformed or n < 1
    """
    name, eq, body = text.partition("=")
    if not eq or name.strip() != "x":
        raise UsageError(f"sweep {text!r} must look like x=a:b:n")
    pieces = body.split(":")
    if len(pieces) != 3:
        raise UsageError(f"sweep {text!r} must look like x=a:b:n")
    start = parse_number(pieces[0], "sweep start")
    stop = parse_number(pieces[1], "sweep stop")
    try:
        count = int(pieces[2])
    except ValueError:
        raise UsageError(f"sweep count must be an integer, got {pieces[2]!r}")
    if count < 1:
        raise UsageError(f"sweep count must be at least 1, got {count}")
    return [float(v) for v in np.linspace(start, stop, count)]
