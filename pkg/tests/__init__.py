# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations
