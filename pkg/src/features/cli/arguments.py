"""
Argument Parser
argparse definition of the omega-calc subcommands
"""
import argparse

from src.errors import UsageError

from .commands import EIGEN_METHODS
from .opspec import OP_SPEC_HELP


class RecordArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting, so usage errors become records"""

    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    common = RecordArgumentParser(add_help=False)
    common.add_argument("--format", choices=["jsonl", "csv"], default="jsonl", help="Output format (default: jsonl)")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default: OMEGA_CALC_SEED, then 0)")
    common.add_argument("--workers", type=int, default=None, help="Worker threads for sweeps and suites (default: OMEGA_WORKERS)")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")
    return common


def _point(parser: argparse.ArgumentParser) -> None:
    where = parser.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", help="Evaluation point")
    where.add_argument("--sweep", help="Evaluate on a grid, e.g. x=0:1:11")


def build_parser() -> RecordArgumentParser:
    common = _common()
    p = RecordArgumentParser(prog="omega-calc", description="Deformed-derivative operator calculus")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=RecordArgumentParser)

    s = sub.add_parser("apply", parents=[common], help="Apply an operator's point map")
    s.add_argument("--op", required=True, help=OP_SPEC_HELP)
    s.add_argument("--inverse", action="store_true", help="Apply the inverse map instead")
    s.add_argument("--orbit", type=int, default=None, metavar="N", help="Also report the first N orbit steps")
    _point(s)

    s = sub.add_parser("derive", parents=[common], help="Deformed derivative of f at x")
    s.add_argument("--op", required=True, help=OP_SPEC_HELP)
    s.add_argument("--f", required=True, help="Expression in x, e.g. 'x^2 + sin(x)'")
    _point(s)

    s = sub.add_parser("inverse-derive", parents=[common], help="Inverse deformed derivative of f at x")
    s.add_argument("--op", required=True, help=OP_SPEC_HELP)
    s.add_argument("--f", required=True, help="Expression in x")
    _point(s)

    s = sub.add_parser("eigen", parents=[common], help="Omega-exponential at x")
    s.add_argument("--op", required=True, help=OP_SPEC_HELP)
    s.add_argument("--method", choices=EIGEN_METHODS, default="product", help="Representation (default: product)")
    s.add_argument("--scale", type=float, default=1.0, help="Eigenvalue of the exponential (default: 1)")
    s.add_argument("--j-max", type=int, default=30, help="Iterates kept by the series method (default: 30)")
    _point(s)

    s = sub.add_parser("bracket", parents=[common], help="Deformed bracket number [[n]] at x")
    s.add_argument("--n", type=int, required=True, help="Non-negative integer")
    s.add_argument("--lambda", dest="lam", type=float, required=True, help="Deformation parameter")
    s.add_argument("--k", type=int, required=True, help="Deformation degree")
    _point(s)

    s = sub.add_parser("mobius", parents=[common], help="Composite matrix action versus operator composition")
    s.add_argument("--lambda", dest="lam", type=float, required=True, help="Deformation parameter")
    s.add_argument("--q", type=float, required=True, help="Dilation factor")
    s.add_argument("--h", type=float, required=True, help="Translation step")
    _point(s)

    s = sub.add_parser("verify", parents=[common], help="Run the property suites")
    s.add_argument("--suite", default="all", help="Suite name (default: all)")

    sub.add_parser("schema", parents=[common], help="Print the output record schema")
    return p
