"""
Output Records
The structured result line every command emits, its schema, and the JSON
lines / CSV writers
"""
import csv
import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, TextIO, Union

from jsonschema import Draft7Validator, ValidationError

from src.errors import OmegaCalcError, ParseError

RECORD_FIELDS = ("command", "inputs", "value", "diagnostics")

RECORD_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "OutputRecord",
    "type": "object",
    "required": list(RECORD_FIELDS),
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "value": {
            "description": "Result, or an error tag when the command failed",
            "type": ["number", "string", "null"],
        },
        "diagnostics": {
            "description": "Convergence flags, term counts, residuals; 'error' holds the message of a failure",
            "type": "object",
        },
    },
}


def _plain(value: Any) -> Any:
    """JSON-safe copy: numpy scalars to Python, non-finite floats to None"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if hasattr(value, "item"):
        return _plain(value.item())
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    return str(value)


@dataclass
class OutputRecord:
    """One result line"""
    command: str
    inputs: Dict[str, Any]
    value: Union[float, str, None]
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_error(self) -> bool:
        return isinstance(self.value, str)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "value": _plain(self.value),
            "diagnostics": _plain(self.diagnostics),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), allow_nan=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OutputRecord":
        """
        Rebuild a record from its dictionary form

        Raises:
            ValueError: If data does not satisfy the record schema
        """
        problems = validate_record(data)
        if problems:
            raise ValueError("; ".join(problems))
        return cls(data["command"], dict(data["inputs"]), data["value"], dict(data["diagnostics"]))


def error_record(command: str, inputs: Dict[str, Any], error: OmegaCalcError) -> OutputRecord:
    """Record whose value is the error's tag"""
    diagnostics: Dict[str, Any] = {"error": str(error)}
    if isinstance(error, ParseError):
        diagnostics["offset"] = error.offset
        diagnostics["expected"] = list(error.expected)
    return OutputRecord(command, inputs, error.tag, diagnostics)


RECORD_VALIDATOR = Draft7Validator(RECORD_SCHEMA)


def validate_record(data: Any) -> List[str]:
    """
    Check a decoded record against RECORD_SCHEMA

    Returns:
        Problems found; empty when the record is valid
    """
    errors = sorted(RECORD_VALIDATOR.iter_errors(data), key=lambda e: [str(part) for part in e.absolute_path])
    return [_describe(error) for error in errors]


def _describe(error: ValidationError) -> str:
    location = ".".join(str(part) for part in error.absolute_path)
    return f"{location}: {error.message}" if location else error.message


def _flatten(record: OutputRecord) -> Dict[str, Any]:
    row: Dict[str, Any] = {"command": record.command}
    data = record.to_dict()
    for key, value in data["inputs"].items():
        row[f"inputs.{key}"] = value
    row["value"] = data["value"]
    for key, value in data["diagnostics"].items():
        row[f"diagnostics.{key}"] = value
    return {k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()}


def write_records(records: Iterable[OutputRecord], stream: TextIO, fmt: str = "jsonl") -> None:
    """
    Write records as JSON lines or as one CSV table

    Args:
        records: Records in emission order
        stream: Text stream to write to
        fmt: 'jsonl' or 'csv'
    """
    if fmt == "jsonl":
        for record in records:
            stream.write(record.to_json() + "\n")
        return

    rows = [_flatten(record) for record in records]
    columns: List[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def read_records(lines: Iterable[str]) -> List[OutputRecord]:
    """Decode JSON-lines output back into records"""
    return [OutputRecord.from_dict(json.loads(line)) for line in lines if line.strip()]


def schema_text(indent: Optional[int] = 2) -> str:
    return json.dumps(RECORD_SCHEMA, indent=indent)
