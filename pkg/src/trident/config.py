# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Solver configuration dataclasses."""

from __future__ import annotations

from dataclasses import dataclass, field
import os
from typing import Final

from .exceptions import ParameterError


ENV_THREADS: Final[str] = "TRIDENT_THREADS"


@dataclass(slots=True, frozen=True)
class FlowConfig:
    """Configuration for the max-flow engine."""

    capacity_bits: int | None = None
    """Checked integer width for capacities and flow values.

    ``None`` keeps Python's arbitrary-precision integers. An integer (e.g. 128)
    makes any value at or above ``2**capacity_bits`` raise
    :class:`~trident.exceptions.CapacityOverflowError`.
    """

    def __post_init__(self) -> None:
        if self.capacity_bits is not None and self.capacity_bits < 2:
            raise ParameterError("capacity_bits", self.capacity_bits, "must be at least 2")


@dataclass(slots=True, frozen=True)
class ExactConfig:
    """Configuration for the flow-based binary search."""

    flow: FlowConfig = field(default_factory=FlowConfig)
    """Max-flow engine configuration."""

    tighten_bounds: bool = False
    """Start at l = c_k(V)/n and u = max_v c_v / k instead of l = 0, u = n^k."""


@dataclass(slots=True, frozen=True)
class PeelConfig:
    """Configuration for the peeling approximations."""

    record_trace: bool = True
    """Keep the per-removal density curve (costs one Fraction per step)."""


def threads_from_env(default: int = 1) -> int:
    """Read the worker cap from ``TRIDENT_THREADS``."""
    raw = os.getenv(ENV_THREADS)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(ENV_THREADS, raw, "must be a positive integer") from exc
    if value < 1:
        raise ParameterError(ENV_THREADS, raw, "must be a positive integer")
    return value


@dataclass(slots=True)
class TridentConfig:
    """Tunable parameters for a trident run.

    Example:
        >>> from trident.config import ExactConfig, FlowConfig, TridentConfig
        >>> config = TridentConfig(exact=ExactConfig(flow=FlowConfig(capacity_bits=128)))
    """

    exact: ExactConfig = field(default_factory=ExactConfig)
    """Exact solver configuration."""

    peel: PeelConfig = field(default_factory=PeelConfig)
    """Peeling configuration."""

    threads: int = field(default_factory=threads_from_env)
    """Worker cap for concurrent sweeps."""


__all__ = ["ENV_THREADS", "ExactConfig", "FlowConfig", "PeelConfig", "TridentConfig", "threads_from_env"]
