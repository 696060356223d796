"""Versioned JSON report schema (``report_v1``) and helpers shared by the CLI."""

from __future__ import annotations

import hashlib
import json

import jsonschema

from .coloring.trace import REGISTRY

SCHEMA_VERSION = "report_v1"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_OUT_OF_CLASS = 3
EXIT_SOUNDNESS = 4
EXIT_ORACLE_BOUND = 5
EXIT_CODES = (EXIT_OK, EXIT_PARSE, EXIT_OUT_OF_CLASS, EXIT_SOUNDNESS, EXIT_ORACLE_BOUND)

_TAG = {"enum": sorted(REGISTRY)}
_TRACE = {"type": "array", "items": _TAG}
_INTS = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_ERROR = {
    "type": "object",
    "required": ["kind", "message"],
    "properties": {
        "kind": {"enum": ["OutOfClass", "PartitionIncomplete", "StableSetViolated", "CaseExhausted",
                          "Precondition", "ParseError", "OracleBound"]},
        "message": {"type": "string"},
        "witness": _INTS,
        "trace": _TRACE,
        "class_report": {"type": "object"},
    },
}

_INSTANCE = {
    "type": "object",
    "required": ["index", "n", "m", "graph6", "exit_code", "result", "case_trace",
                 "verification", "timings", "error"],
    "properties": {
        "index": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 0},
        "m": {"type": "integer", "minimum": 0},
        "graph6": {"type": "string"},
        "exit_code": {"enum": list(EXIT_CODES)},
        "result": {"type": ["object", "null"]},
        "case_trace": _TRACE,
        "verification": {"type": "object",
                         "additionalProperties": {"type": ["boolean", "integer", "null"]}},
        "timings": {"type": "object", "additionalProperties": {"type": "number", "minimum": 0}},
        "error": {"oneOf": [{"type": "null"}, _ERROR]},
    },
}

RUN_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "command", "input_digest", "exit_code", "instances"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "run"},
        "command": {"enum": ["color", "check", "oracle"]},
        "options": {"type": "object"},
        "input_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        "exit_code": {"enum": list(EXIT_CODES)},
        "instances": {"type": "array", "items": _INSTANCE},
        "error": {"oneOf": [{"type": "null"}, _ERROR]},
    },
}

FUZZ_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "mode", "seed", "instances", "sampled", "absent",
                 "branch_histogram", "max_colors", "violations", "exit_code"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "fuzz"},
        "mode": {"enum": ["differential", "conjecture"]},
        "seed": {"type": "integer"},
        "max_n": {"type": "integer", "minimum": 1},
        "class_id": {"type": "string"},
        "instances": {"type": "integer", "minimum": 0},
        "sampled": {"type": "integer", "minimum": 0},
        "absent": {"type": "integer", "minimum": 0},
        "branch_histogram": {"type": "object", "propertyNames": _TAG,
                             "additionalProperties": {"type": "integer", "minimum": 1}},
        "omega_histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "max_colors": {"type": "integer", "minimum": 0},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "kind", "graph6", "detail"],
                "properties": {
                    "index": {"type": "integer"},
                    "kind": {"type": "string"},
                    "graph6": {"type": "string"},
                    "detail": {"type": "string"},
                },
            },
        },
        "exit_code": {"enum": list(EXIT_CODES)},
    },
}

AUDIT_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "input_digest", "instances", "covered", "uncovered", "failures"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "audit"},
        "input_digest": {"type": "string"},
        "instances": {"type": "integer", "minimum": 0},
        "covered": {"type": "object", "propertyNames": _TAG,
                    "additionalProperties": {"type": "integer", "minimum": 0}},
        "uncovered": {"type": "array", "items": _TAG},
        "failures": {"type": "array", "items": {"type": "object"}},
    },
}

SCHEMAS = {"run": RUN_SCHEMA, "fuzz": FUZZ_SCHEMA, "audit": AUDIT_SCHEMA}


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def validate(report: dict) -> None:
    """Raise ``jsonschema.ValidationError`` unless the report matches its schema."""
    jsonschema.validate(report, SCHEMAS[report["kind"]])


def dumps(report: dict) -> str:
    """Canonical serialization: sorted keys, fixed separators, trailing newline."""
    validate(report)
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
