# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
import io
import json
import logging

import pytest

from trident.utils.logger import (
    ColoredFormatter,
    PlainFormatter,
    StructuredJSONFormatter,
    TridentHandler,
    get_logger,
    log_duration,
    setup_logger,
)


@pytest.fixture(autouse=True)
def _restore_root() -> Iterator[None]:
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


def _capture(formatter: logging.Formatter, emit) -> str:
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(formatter)
    logger = logging.getLogger("trident.test.logger")
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    try:
        emit(logger)
    finally:
        logger.handlers = []
        logger.propagate = True
    return stream.getvalue().strip()


def _ours() -> TridentHandler:
    return next(h for h in logging.getLogger().handlers if isinstance(h, TridentHandler))


def test_setup_logger_plain(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TRIDENT_LOG_JSON", "0")
    setup_logger(force=True, use_color=False)
    line = _capture(_ours().formatter, lambda log: log.info("demo"))
    assert line.endswith("INFO [trident.test.logger] demo")


def test_force_replaces_the_trident_handler(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("TRIDENT_LOG_JSON", raising=False)
    setup_logger(force=True)
    setup_logger(force=True, use_json=True)
    ours = [h for h in logging.getLogger().handlers if isinstance(h, TridentHandler)]
    assert len(ours) == 1
    assert isinstance(ours[0].formatter, StructuredJSONFormatter)


def test_without_force_the_first_handler_stays(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("TRIDENT_LOG_JSON", raising=False)
    setup_logger(force=True, use_json=True)
    setup_logger(use_json=False)
    assert isinstance(_ours().formatter, StructuredJSONFormatter)


def test_env_selects_level_and_json(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TRIDENT_LOG_LEVEL", "warning")
    monkeypatch.setenv("TRIDENT_LOG_JSON", "yes")
    setup_logger(force=True)
    assert logging.getLogger().level == logging.WARNING
    assert isinstance(_ours().formatter, StructuredJSONFormatter)


def test_unknown_level_falls_back_to_info(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("TRIDENT_LOG_LEVEL", "chatty")
    setup_logger(force=True)
    assert logging.getLogger().level == logging.INFO


def test_no_color_env_selects_plain_formatter(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("TRIDENT_LOG_JSON", raising=False)
    monkeypatch.setenv("NO_COLOR", "1")
    setup_logger(force=True)
    assert type(_ours().formatter) is PlainFormatter


def test_get_logger_uses_the_trident_namespace() -> None:
    assert get_logger().name == "trident"
    assert get_logger("trident.lp").name == "trident.lp"


def test_json_lines_carry_context_and_extras() -> None:
    line = _capture(
        StructuredJSONFormatter(),
        lambda log: log.info("peel finished", extra={"context": {"removals": 33}, "density": Fraction(8, 3)}),
    )
    payload = json.loads(line)
    assert payload["logger"] == "trident.test.logger"
    assert payload["level"] == "info"
    assert payload["context"] == {"removals": 33, "density": "8/3"}


def test_json_lines_without_extras_have_no_context() -> None:
    payload = json.loads(_capture(StructuredJSONFormatter(), lambda log: log.warning("bare")))
    assert "context" not in payload
    assert payload["message"] == "bare"


def test_plain_formatter_appends_duration_suffix() -> None:
    record = logging.LogRecord("demo", logging.INFO, __file__, 0, "done", args=(), exc_info=None)
    record.duration_ms = 12.3456
    assert PlainFormatter().format(record).endswith("done [12.35 ms]")


def test_colored_formatter_appends_duration_suffix() -> None:
    record = logging.LogRecord("demo", logging.INFO, __file__, 0, "done", args=(), exc_info=None)
    record.duration_ms = 7.0
    rendered = ColoredFormatter().format(record)
    assert "[7.00 ms]" in rendered
    assert record.levelname == "INFO"
    assert record.name == "demo"


def test_log_duration_attaches_context_and_timing() -> None:
    def emit(logger: logging.Logger) -> None:
        with log_duration(logger, "exact solve finished", context={"n": 34}) as ctx:
            ctx["density"] = "8/3"

    payload = json.loads(_capture(StructuredJSONFormatter(), emit))
    assert payload["message"] == "exact solve finished"
    assert payload["context"]["n"] == 34
    assert payload["context"]["density"] == "8/3"
    assert payload["context"]["duration_ms"] >= 0
