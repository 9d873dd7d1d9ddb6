# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""JSON serialization utilities for reports and solver results.

Exact rationals are rendered with ``str(Fraction)`` (``"8/3"``, or ``"3"`` for
integral values), which ``Fraction(text)`` parses back losslessly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from pydantic import TypeAdapter


# Handles pydantic models, dataclasses, nested containers and primitives
_json_adapter: TypeAdapter[Any] = TypeAdapter(Any)


def format_fraction(value: Fraction) -> str:
    return str(value)


def _fallback(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def to_json(obj: Any) -> Any:
    """Convert any object to a JSON-serializable structure.

    Example:
        >>> to_json({"density": Fraction(8, 3), "rounds": 4})
        {'density': '8/3', 'rounds': 4}
    """
    return _json_adapter.dump_python(obj, mode="json", fallback=_fallback)


__all__ = ["format_fraction", "to_json"]
