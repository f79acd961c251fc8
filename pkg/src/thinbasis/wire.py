"""Wire encoding shared by the CLI and the HTTP service.

Every structured output is an envelope {schema_version, construction,
command, result}.  Scheme products and decomposition inputs routinely
exceed 2**53 - 1, past which JSON consumers with double-based number
types silently lose precision, so integers beyond that magnitude travel
as decimal strings.  from_wire undoes the conversion; it treats every
digit-only string as an integer, which is safe here because no genuine
string field in any report is digit-only (kinds and commands are words,
decimals contain a dot).
"""

from __future__ import annotations

import json

SCHEMA_VERSION = "1"
SAFE_MAX = 2**53 - 1


def to_wire(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_MAX else value
    if isinstance(value, (list, tuple)):
        return [to_wire(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_wire(v) for k, v in value.items()}
    return value


def from_wire(value):
    if isinstance(value, str) and value and value.lstrip("-").isdigit():
        return int(value)
    if isinstance(value, list):
        return [from_wire(v) for v in value]
    if isinstance(value, dict):
        return {k: from_wire(v) for k, v in value.items()}
    return value


def envelope(construction: str, command: str, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "construction": construction,
        "command": command,
        "result": to_wire(result),
    }


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"
