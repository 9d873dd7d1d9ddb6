# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Solver configuration defaults and environment overrides."""

from __future__ import annotations

import pytest

from trident.config import ENV_THREADS, ExactConfig, FlowConfig, PeelConfig, TridentConfig, threads_from_env
from trident.exceptions import ParameterError


# --- Defaults ---


def test_nested_defaults(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv(ENV_THREADS, raising=False)
    config = TridentConfig()
    assert config.exact.flow.capacity_bits is None
    assert config.exact.tighten_bounds is False
    assert config.peel.record_trace is True
    assert config.threads == 1


def test_configs_are_frozen():
    with pytest.raises(AttributeError):
        ExactConfig().tighten_bounds = True  # type: ignore[misc]


# --- Validation ---


def test_capacity_width_must_be_sane():
    with pytest.raises(ParameterError):
        FlowConfig(capacity_bits=1)
    assert FlowConfig(capacity_bits=128).capacity_bits == 128


# --- Environment ---


def test_threads_from_env(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv(ENV_THREADS, "6")
    assert threads_from_env() == 6
    assert TridentConfig().threads == 6


def test_blank_threads_env_uses_default(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv(ENV_THREADS, "  ")
    assert threads_from_env(default=3) == 3


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_bad_threads_env(monkeypatch: pytest.MonkeyPatch, raw: str):
    monkeypatch.setenv(ENV_THREADS, raw)
    with pytest.raises(ParameterError):
        threads_from_env()


def test_explicit_values_win(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv(ENV_THREADS, "6")
    config = TridentConfig(peel=PeelConfig(record_trace=False), threads=2)
    assert config.threads == 2
    assert config.peel.record_trace is False
