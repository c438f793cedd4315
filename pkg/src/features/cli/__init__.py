"""
CLI Package

Command implementations, operator and sweep specs, and the structured output
records of the omega-calc command-line tool.
"""

from .records import OutputRecord, RECORD_SCHEMA, error_record, validate_record, write_records, read_records, schema_text
from .opspec import parse_op_spec, parse_sweep, parse_number
from .commands import (
    EIGEN_METHODS,
    guarded,
    sweep,
    cmd_apply,
    cmd_derive,
    cmd_inverse_derive,
    cmd_eigen,
    cmd_bracket,
    cmd_mobius,
    cmd_verify,
)
from .arguments import RecordArgumentParser, build_parser

__all__ = [
    'OutputRecord',
    'RECORD_SCHEMA',
    'error_record',
    'validate_record',
    'write_records',
    'read_records',
    'schema_text',
    'parse_op_spec',
    'parse_sweep',
    'parse_number',
    'EIGEN_METHODS',
    'guarded',
    'sweep',
    'cmd_apply',
    'cmd_derive',
    'cmd_inverse_derive',
    'cmd_eigen',
    'cmd_bracket',
    'cmd_mobius',
    'cmd_verify',
    'RecordArgumentParser',
    'build_parser',
]
