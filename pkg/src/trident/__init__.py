# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Triangle- and k-clique-densest subgraph discovery.

    >>> from trident import Graph, list_triangles, solve_exact
    >>> g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
    >>> result = solve_exact(g, list_triangles(g))
    >>> sorted(result.best_set), result.density
    ([0, 1, 2], Fraction(1, 3))
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

from .cliques import CliqueIndex, TriangleTypeCounts, clique_index, edge_index, list_kcliques, list_triangles
from .config import ExactConfig, FlowConfig, PeelConfig, TridentConfig
from .exceptions import (
    CapacityOverflowError,
    EdgeListParseError,
    OracleLimitError,
    ParameterError,
    SolutionParseError,
    TridentError,
    TridentErrorCode,
    UsageError,
    VertexDomainError,
)
from .flow import CutResult, FlowNetwork, max_flow
from .graph import DensityReport, Graph, VertexSet, density_report, load_edge_list, read_edge_list
from .lp import LpSolution, export_lp, feasible_from_set, parse_solution, round_solution
from .oracle import OracleResult, brute_force_cut, brute_force_densest
from .solvers import SolveResult, batch_peel, greedy_ds, grow_from_query, peel, solve_constrained, solve_exact


try:
    __version__ = version("trident")
except PackageNotFoundError:
    __version__ = "0.0.0+local"


__all__ = [
    "CapacityOverflowError",
    "CliqueIndex",
    "CutResult",
    "DensityReport",
    "EdgeListParseError",
    "ExactConfig",
    "FlowConfig",
    "FlowNetwork",
    "Graph",
    "LpSolution",
    "OracleLimitError",
    "OracleResult",
    "ParameterError",
    "PeelConfig",
    "SolutionParseError",
    "SolveResult",
    "TriangleTypeCounts",
    "TridentConfig",
    "TridentError",
    "TridentErrorCode",
    "UsageError",
    "VertexDomainError",
    "VertexSet",
    "__version__",
    "batch_peel",
    "brute_force_cut",
    "brute_force_densest",
    "clique_index",
    "density_report",
    "edge_index",
    "export_lp",
    "feasible_from_set",
    "greedy_ds",
    "grow_from_query",
    "list_kcliques",
    "list_triangles",
    "load_edge_list",
    "max_flow",
    "parse_solution",
    "peel",
    "read_edge_list",
    "round_solution",
    "solve_constrained",
    "solve_exact",
]
