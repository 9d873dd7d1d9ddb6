# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Logging for trident: one stderr handler, plain/colored or JSON lines.

Solver phases log through :func:`log_duration`, which attaches the wall time
(``duration_ms``) and a ``context`` dict of solver facts to a single record.
Reports go to stdout, so the handler always writes to stderr.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
import json
import logging
import os
import time
from typing import Any, ClassVar, Final

from .serializer import format_fraction


DEFAULT_LOGGER_NAME: Final[str] = "trident"
ENV_LOG_LEVEL: Final[str] = "TRIDENT_LOG_LEVEL"
ENV_LOG_JSON: Final[str] = "TRIDENT_LOG_JSON"
ENV_NO_COLOR: Final[str] = "NO_COLOR"
LOG_FORMAT: Final[str] = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
DATE_FORMAT: Final[str] = "%Y-%m-%d %H:%M:%S"

RESET: Final[str] = "\033[0m"
DIM: Final[str] = "\033[2m"
NAME_COLOR: Final[str] = "\033[94m"

# attributes every LogRecord carries; anything else came in through ``extra``
_RECORD_ATTRS: Final[frozenset[str]] = frozenset(vars(logging.makeLogRecord({}))) | {
    "message",
    "asctime",
    "taskName",
}


def _timing(record: logging.LogRecord) -> str | None:
    duration = getattr(record, "duration_ms", None)
    if not isinstance(duration, (int, float)):
        return None
    return f"[{duration:.2f} ms]"


class PlainFormatter(logging.Formatter):
    """Standard text layout with the solve time appended."""

    def __init__(self) -> None:
        super().__init__(LOG_FORMAT, datefmt=DATE_FORMAT)

    def format(self, record: logging.LogRecord) -> str:
        rendered = super().format(record)
        timing = _timing(record)
        return f"{rendered} {timing}" if timing else rendered


class ColoredFormatter(PlainFormatter):
    """Plain layout with ANSI colors on the level, logger name and timing."""

    LEVEL_COLORS: ClassVar[dict[str, str]] = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[1;31m",
        "CRITICAL": "\033[1;35m",
    }

    def format(self, record: logging.LogRecord) -> str:
        levelname, name = record.levelname, record.name
        record.levelname = f"{self.LEVEL_COLORS.get(levelname, '')}{levelname}{RESET}"
        record.name = f"{NAME_COLOR}{name}{RESET}"
        try:
            rendered = logging.Formatter.format(self, record)
        finally:
            record.levelname, record.name = levelname, name
        timing = _timing(record)
        return f"{rendered} {DIM}{timing}{RESET}" if timing else rendered


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_fraction(value)
    return str(value)


class StructuredJSONFormatter(logging.Formatter):
    """One JSON object per record; ``extra`` fields and ``context`` land under ``"context"``."""

    def __init__(self) -> None:
        super().__init__(datefmt=DATE_FORMAT)

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname.lower(),
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)

        context: dict[str, Any] = {}
        for key, value in vars(record).items():
            if key == "context" and isinstance(value, dict):
                context.update(value)
            elif key not in _RECORD_ATTRS:
                context.setdefault(key, value)
        if context:
            payload["context"] = context
        return json.dumps(payload, ensure_ascii=False, default=_jsonable)


class TridentHandler(logging.StreamHandler):  # type: ignore[type-arg]
    """The stderr handler :func:`setup_logger` owns; at most one is attached to the root."""


def _env_flag(key: str) -> bool:
    return os.getenv(key, "").strip().lower() in {"1", "true", "yes", "on"}


def _resolve_level(level: int | str | None) -> int:
    if level is None:
        level = os.getenv(ENV_LOG_LEVEL) or logging.INFO
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.strip().upper())
    return resolved if isinstance(resolved, int) else logging.INFO


def _ours(root: logging.Logger) -> list[TridentHandler]:
    return [handler for handler in root.handlers if isinstance(handler, TridentHandler)]


def setup_logger(
    *, level: int | str | None = None, use_json: bool | None = None, use_color: bool | None = None, force: bool = False
) -> None:
    """Attach trident's stderr handler to the root logger.

    Args:
        level: Log level; falls back to ``TRIDENT_LOG_LEVEL``, then INFO.
        use_json: JSON lines; falls back to ``TRIDENT_LOG_JSON``.
        use_color: ANSI colors; off for JSON or when ``NO_COLOR`` is set.
        force: Replace an existing trident handler instead of keeping it.
    """
    root = logging.getLogger()
    existing = _ours(root)
    if existing and not force:
        return
    for handler in existing:
        root.removeHandler(handler)
        handler.close()

    resolved_level = _resolve_level(level)
    json_lines = _env_flag(ENV_LOG_JSON) if use_json is None else use_json
    if use_color is None:
        use_color = not json_lines and not os.getenv(ENV_NO_COLOR)

    handler = TridentHandler()
    handler.setLevel(resolved_level)
    formatter: logging.Formatter
    if json_lines:
        formatter = StructuredJSONFormatter()
    elif use_color:
        formatter = ColoredFormatter()
    else:
        formatter = PlainFormatter()
    handler.setFormatter(formatter)
    root.setLevel(resolved_level)
    root.addHandler(handler)


def get_logger(name: str | None = None) -> logging.Logger:
    """Return a logger under the ``trident`` namespace, configuring logging on first use."""
    if not _ours(logging.getLogger()):
        setup_logger()
    return logging.getLogger(name or DEFAULT_LOGGER_NAME)


@contextmanager
def log_duration(
    logger: logging.Logger, message: str, *, level: int = logging.INFO, context: dict[str, Any] | None = None
) -> Iterator[dict[str, Any]]:
    """Log *message* once the block exits, tagged with its wall time.

    The yielded dict is merged into the record context, so callers can attach
    results computed inside the block:

        with log_duration(logger, "exact solve", context={"n": g.n}) as ctx:
            result = solve()
            ctx["density"] = str(result.density)
    """
    ctx: dict[str, Any] = dict(context or {})
    started = time.perf_counter()
    try:
        yield ctx
    finally:
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        logger.log(level, message, extra={"context": ctx, "duration_ms": elapsed_ms})


__all__ = [
    "DEFAULT_LOGGER_NAME",
    "ColoredFormatter",
    "PlainFormatter",
    "StructuredJSONFormatter",
    "TridentHandler",
    "get_logger",
    "log_duration",
    "setup_logger",
]
