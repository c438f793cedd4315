"""
omega-calc command-line entry point.
Parses the subcommand, runs it over a point or a sweep, and writes one
structured record per result to stdout.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric error.
"""
import logging
import os
import sys
from typing import List, Optional

# Add the project root to Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.config import Config, configure_logging
from src.errors import InvalidOperator, OmegaCalcError, UsageError
from src.features.calculus import RealFunction
from src.features.cli import (
    OutputRecord,
    build_parser,
    cmd_apply,
    cmd_bracket,
    cmd_derive,
    cmd_eigen,
    cmd_inverse_derive,
    cmd_mobius,
    cmd_verify,
    error_record,
    parse_number,
    parse_op_spec,
    parse_sweep,
    schema_text,
    sweep,
    write_records,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

USAGE_TAGS = {UsageError.tag, InvalidOperator.tag}


def exit_code(records: List[OutputRecord]) -> int:
    """Most severe outcome among the records"""
    tags = {r.value for r in records if r.is_error}
    if tags & USAGE_TAGS:
        return EXIT_USAGE
    if tags:
        return EXIT_NUMERIC
    if any(r.command == "verify" and r.diagnostics.get("passed") is False for r in records):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _points(args) -> List[float]:
    if args.sweep is not None:
        return parse_sweep(args.sweep)
    return [parse_number(args.x, "x")]


def run_command(args, config: Config) -> List[OutputRecord]:
    """
    Dispatch parsed arguments to the command functions

    Raises:
        OmegaCalcError: For inputs rejected before any point is evaluated
    """
    workers = args.workers if args.workers is not None else config.workers
    if workers < 1:
        raise UsageError(f"--workers must be at least 1, got {workers}")

    if args.cmd == "verify":
        seed = args.seed if args.seed is not None else config.seed
        return cmd_verify(args.suite, seed, workers)

    points = _points(args)

    if args.cmd == "bracket":
        return sweep(points, lambda x: cmd_bracket(args.n, args.lam, args.k, x), workers)
    if args.cmd == "mobius":
        return sweep(points, lambda x: cmd_mobius(args.lam, args.q, args.h, x), workers)

    op = parse_op_spec(args.op)
    if args.cmd == "apply":
        if args.orbit is not None and args.orbit < 0:
            raise UsageError(f"--orbit must be non-negative, got {args.orbit}")
        return sweep(points, lambda x: cmd_apply(op, x, args.inverse, args.orbit), workers)
    if args.cmd == "eigen":
        if args.j_max < 0:
            raise UsageError(f"--j-max must be non-negative, got {args.j_max}")
        return sweep(
            points,
            lambda x: cmd_eigen(op, x, args.method, config.eigen_settings(), config.inverse_config(), args.j_max, args.scale),
            workers,
        )

    f = RealFunction.of(args.f)
    if args.cmd == "derive":
        return sweep(points, lambda x: cmd_derive(op, f, x, config.derivative_config()), workers)
    if args.cmd == "inverse-derive":
        return sweep(points, lambda x: cmd_inverse_derive(op, f, x, config.inverse_config()), workers)

    raise UsageError(f"unknown command {args.cmd!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main application flow"""
    argv = list(sys.argv[1:] if argv is None else argv)
    config = Config()
    if not config.validate():
        configure_logging()
        write_records([OutputRecord("config", {}, UsageError.tag, {"error": "; ".join(config.problems())})], sys.stdout)
        return EXIT_USAGE

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        configure_logging(config.log_level)
        command = argv[0] if argv and not argv[0].startswith("-") else ""
        write_records([error_record(command, {"argv": argv}, e)], sys.stdout)
        return EXIT_USAGE

    configure_logging(config.log_level, verbose=args.verbose or config.debug_mode)

    if args.cmd == "schema":
        sys.stdout.write(schema_text() + "\n")
        return EXIT_OK

    try:
        records = run_command(args, config)
    except OmegaCalcError as e:
        logger.error("%s rejected its inputs: %s", args.cmd, e)
        records = [error_record(args.cmd, {"argv": argv}, e)]

    write_records(records, sys.stdout, args.format)
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
