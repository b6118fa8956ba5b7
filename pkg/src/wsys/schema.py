"""JSON schemas for the CLI's --json output."""

_MODEL = {"type": "array", "items": {"type": "string"}}

SOLVE_RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "wsys solve result",
    "type": "object",
    "required": ["command", "sense", "vocabulary", "models", "optimal", "optimum"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "solve"},
        "sense": {"enum": ["max", "min"]},
        "vocabulary": {"type": "array", "items": {"type": "string"}},
        "models": {"type": "array", "items": _MODEL},
        "optimal": {"type": "array", "items": _MODEL},
        "optimum": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["model", "sums"],
                "additionalProperties": False,
                "properties": {
                    "model": _MODEL,
                    "sums": {
                        "type": "object",
                        "patternProperties": {r"^[0-9]+$": {"type": "integer"}},
                        "additionalProperties": False,
                    },
                },
            },
        },
    },
}

CHECK_RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "wsys check result",
    "type": "object",
    "required": ["command", "results", "passed"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "check"},
        "passed": {"type": "boolean"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}
