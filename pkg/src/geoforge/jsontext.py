"""Canonical JSON text for structure dumps.

Every dump in the package goes through this serializer so that equal
structures produce byte-identical output: compact separators, keys in
insertion order, numbers with at most 12 significant digits and no
trailing zeros.
"""

from __future__ import annotations

import json
import math


def format_number(value) -> str:
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if not math.isfinite(v):
        raise ValueError("cannot serialize non-finite number")
    if v == 0.0:
        return "0"
    return "%.12g" % v


def dumps(value) -> str:
    """Serialize nested dicts/lists/numbers/strings/bools/None."""
    parts: list[str] = []
    _write(value, parts)
    return "".join(parts)


def _write(value, parts: list[str]) -> None:
    if value is None:
        parts.append("null")
    elif value is True:
        parts.append("true")
    elif value is False:
        parts.append("false")
    elif isinstance(value, (int, float)):
        parts.append(format_number(value))
    elif isinstance(value, str):
        parts.append(json.dumps(value))
    elif isinstance(value, (list, tuple)):
        parts.append("[")
        for i, item in enumerate(value):
            if i:
                parts.append(",")
            _write(item, parts)
        parts.append("]")
    elif isinstance(value, dict):
        parts.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                parts.append(",")
            parts.append(json.dumps(key))
            parts.append(":")
            _write(item, parts)
        parts.append("}")
    else:
        raise TypeError("cannot serialize %r" % type(value).__name__)


def loads(text: str):
    return json.loads(text)
