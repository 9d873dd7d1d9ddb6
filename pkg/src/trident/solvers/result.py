# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Result types shared by the exact and peeling solvers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..cliques import CliqueIndex
from ..graph import DensityReport, Graph, VertexSet, build_report
from ..utils import format_fraction


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Best vertex set found by a solver.

    Attributes:
        best_set: Internal ids of the returned set.
        density: ``c_k(best_set) / |best_set|`` as an exact rational.
        report: Full density report of ``best_set``.
        iterations: Binary-search steps (exact), removals (peel) or rounds (batch).
        method: Solver name, e.g. ``"tds-exact"``.
        no_clique: The graph holds no k-clique, so the density is 0.
    """

    best_set: VertexSet
    density: Fraction
    report: DensityReport
    iterations: int
    method: str
    no_clique: bool = False

    def to_payload(self, graph: Graph) -> dict[str, Any]:
        return {
            "method": self.method,
            "density": format_fraction(self.density),
            "iterations": self.iterations,
            "no_clique": self.no_clique,
            "report": self.report.to_payload(graph).model_dump(mode="json"),
        }


def solve_result(
    graph: Graph, index: CliqueIndex, members: VertexSet, *, iterations: int, method: str
) -> SolveResult:
    """Wrap *members* in a :class:`SolveResult` with its full report."""
    report = build_report(graph, members, k=index.k, cliques=index.count_inside(members))
    return SolveResult(
        best_set=members,
        density=report.tau,
        report=report,
        iterations=iterations,
        method=method,
        no_clique=len(index) == 0,
    )


__all__ = ["SolveResult", "solve_result"]
