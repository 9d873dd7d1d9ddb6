# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Exact and approximate clique-density solvers."""

from __future__ import annotations

from .exact import (
    NetworkLayout,
    ParametricNetwork,
    build_network,
    canonical_source_side,
    cut_cost_formula,
    iteration_bound,
    solve_constrained,
    solve_exact,
)
from .peeling import PeelBuckets, PeelTrace, batch_peel, batch_round_bound, greedy_ds, grow_from_query, peel
from .result import SolveResult, solve_result


__all__ = [
    "NetworkLayout",
    "ParametricNetwork",
    "PeelBuckets",
    "PeelTrace",
    "SolveResult",
    "batch_peel",
    "batch_round_bound",
    "build_network",
    "canonical_source_side",
    "cut_cost_formula",
    "greedy_ds",
    "grow_from_query",
    "iteration_bound",
    "peel",
    "solve_constrained",
    "solve_exact",
    "solve_result",
]
