import json

from ._gaoforge import (
    SCHEMA_VERSION,
    BudgetExhausted,
    ParseError,
    canonical_profile,
    classify,
    davenport,
    format_sequence,
    gao,
    parse_sequence,
)
from ._gaoforge import run as _run

__all__ = [
    "SCHEMA_VERSION",
    "BudgetExhausted",
    "ParseError",
    "canonical_profile",
    "classify",
    "davenport",
    "format_sequence",
    "gao",
    "parse_sequence",
    "run",
]


def run(command, **kwargs):
    """Run a gaoforge command; returns (report dict, exit code)."""
    text, code = _run(command, **kwargs)
    return json.loads(text), code
