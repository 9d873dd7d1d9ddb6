# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Utility helpers for trident."""

from __future__ import annotations

from .logger import get_logger, log_duration, setup_logger
from .serializer import format_fraction, to_json


__all__ = ["format_fraction", "get_logger", "log_duration", "setup_logger", "to_json"]
