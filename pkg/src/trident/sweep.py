# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Epsilon sweeps of batch peeling, measured against a reference set.

Each epsilon is an independent solve over the same immutable graph and index,
so the points run on worker threads under a capacity limiter. Rows come back
in input order whatever order the workers finish in.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Literal

import anyio
import anyio.to_thread

from .cliques import CliqueIndex
from .config import TridentConfig
from .graph import Graph
from .solvers.exact import solve_exact
from .solvers.peeling import as_epsilon, batch_peel, peel
from .solvers.result import SolveResult
from .utils import get_logger, log_duration


_logger = get_logger("trident.sweep")

Reference = Literal["exact", "peel"]


def _ratio(numerator: Fraction, denominator: Fraction) -> Fraction:
    return numerator / denominator if denominator else Fraction(0)


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One epsilon point: rounds used and quality relative to the reference set."""

    epsilon: Fraction
    rounds: int
    result: SolveResult
    density_ratio: Fraction
    lower_bound: Fraction
    f_e_ratio: Fraction
    f_t_ratio: Fraction

    @classmethod
    def measure(cls, epsilon: Fraction, result: SolveResult, rounds: int, reference: SolveResult) -> SweepRow:
        k = result.report.k
        return cls(
            epsilon=epsilon,
            rounds=rounds,
            result=result,
            density_ratio=_ratio(result.density, reference.density),
            lower_bound=1 / (k * (1 + epsilon)),
            f_e_ratio=_ratio(result.report.f_e, reference.report.f_e),
            f_t_ratio=_ratio(result.report.f_t, reference.report.f_t),
        )


def reference_solution(
    graph: Graph, index: CliqueIndex, reference: Reference, config: TridentConfig | None = None
) -> SolveResult:
    config = config or TridentConfig()
    if reference == "exact":
        return solve_exact(graph, index, config=config.exact)
    return peel(graph, index, config=config.peel)[0]


async def sweep_batch(
    graph: Graph,
    index: CliqueIndex,
    epsilons: Sequence[Fraction | float | str],
    reference: SolveResult,
    *,
    threads: int = 1,
) -> list[SweepRow]:
    """Run :func:`batch_peel` once per epsilon, at most *threads* at a time."""
    points = [as_epsilon(eps) for eps in epsilons]
    results: dict[int, SweepRow] = {}
    limiter = anyio.CapacityLimiter(max(1, threads))

    async def _point(position: int, epsilon: Fraction) -> None:
        result, rounds = await anyio.to_thread.run_sync(batch_peel, graph, index, epsilon, limiter=limiter)
        results[position] = SweepRow.measure(epsilon, result, rounds, reference)

    context = {"points": len(points), "threads": threads, "n": graph.n, "k": index.k}
    with log_duration(_logger, "epsilon sweep finished", context=context):
        async with anyio.create_task_group() as tg:
            for position, epsilon in enumerate(points):
                tg.start_soon(_point, position, epsilon)

    return [results[position] for position in range(len(points))]


def run_sweep(
    graph: Graph,
    index: CliqueIndex,
    epsilons: Sequence[Fraction | float | str],
    *,
    reference: Reference = "exact",
    config: TridentConfig | None = None,
) -> tuple[SolveResult, list[SweepRow]]:
    """Blocking entry point: solve the reference, then sweep."""
    config = config or TridentConfig()
    baseline = reference_solution(graph, index, reference, config)
    rows = anyio.run(partial(sweep_batch, graph, index, epsilons, baseline, threads=config.threads))
    return baseline, rows


__all__ = ["Reference", "SweepRow", "reference_solution", "run_sweep", "sweep_batch"]
