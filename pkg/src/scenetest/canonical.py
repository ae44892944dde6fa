"""Canonical JSON serialization and content digests.

Every file this tool writes (catalogs, reports, recorded test cases) goes
through ``dumps`` so that identical values always produce identical bytes:
keys are sorted, floats are rendered with 17 significant digits, and no
whitespace varies.  Digests over those bytes are therefore stable across
runs and platforms.
"""

from __future__ import annotations

import hashlib
import json
import math
from typing import Any


class CanonicalError(ValueError):
    """Raised for values that cannot be canonically serialized."""


def _render(value: Any, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise CanonicalError(f"non-finite number not representable: {value!r}")
        out.append(format(value, ".17g"))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _render(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise CanonicalError(f"non-string key: {key!r}")
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=True))
            out.append(":")
            _render(value[key], out)
        out.append("}")
    else:
        raise CanonicalError(f"unsupported type: {type(value).__name__}")


def dumps(value: Any) -> str:
    """Serialize a JSON-compatible value tree to its canonical form."""
    out: list[str] = []
    _render(value, out)
    return "".join(out)


def dump_bytes(value: Any) -> bytes:
    return dumps(value).encode("utf-8")


def digest(value: Any) -> str:
    """SHA-256 hex digest of the canonical serialization of ``value``."""
    return hashlib.sha256(dump_bytes(value)).hexdigest()


def digest_text(text: str) -> str:
    """Digest of a JSON document, insensitive to formatting of the source."""
    return digest(json.loads(text))
