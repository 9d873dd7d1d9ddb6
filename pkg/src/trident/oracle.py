# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Exhaustive ground truth for tiny instances.

Nothing here shares code with the enumerators or the flow engine: cliques are
found by checking every k-subset pair by pair, and cuts by trying every source
side. Both scans refuse instances above a hard size cap.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Final, Literal

from .exceptions import OracleLimitError, ParameterError
from .flow import FlowNetwork, cut_capacity
from .graph import Graph, VertexSet


MAX_ORACLE_VERTICES: Final[int] = 20
MAX_CUT_NODES: Final[int] = 22
"""Non-terminal nodes; the source and sink are not counted."""

ScanOrder = Literal["masks", "sizes"]


@dataclass(frozen=True, slots=True)
class OracleResult:
    """Optimum of an exhaustive scan.

    Attributes:
        density: Best ``c_k(S) / |S|`` over the scanned sets.
        witness: Lexicographically smallest maximizer (compared as sorted id tuples).
        scanned: Number of sets evaluated.
    """

    density: Fraction
    witness: VertexSet
    scanned: int


def brute_force_cliques(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """Every k-subset whose pairs are all adjacent, in lexicographic order."""
    if k < 2:
        raise ParameterError("k", k, "clique order must be at least 2")
    if graph.n > MAX_ORACLE_VERTICES:
        raise OracleLimitError(graph.n, MAX_ORACLE_VERTICES)
    return [
        subset
        for subset in combinations(range(graph.n), k)
        if all(graph.has_edge(u, v) for u, v in combinations(subset, 2))
    ]


def _better(density: Fraction, members: tuple[int, ...], best: tuple[Fraction, tuple[int, ...]] | None) -> bool:
    if best is None:
        return True
    return density > best[0] or (density == best[0] and members < best[1])


def _scan_masks(n: int, cliques: list[tuple[int, ...]], required: int) -> OracleResult:
    # counts[mask] = cliques inside mask, built from mask with its lowest bit cleared
    masks_with = [[sum(1 << u for u in c) for c in cliques if v in c] for v in range(n)]
    counts = [0] * (1 << n)
    best: tuple[Fraction, tuple[int, ...]] | None = None
    scanned = 0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        counts[mask] = counts[mask & (mask - 1)] + sum(1 for c in masks_with[low] if c & mask == c)
        if mask & required != required:
            continue
        scanned += 1
        members = tuple(v for v in range(n) if mask >> v & 1)
        density = Fraction(counts[mask], len(members))
        if _better(density, members, best):
            best = (density, members)
    if best is None:
        return OracleResult(density=Fraction(0), witness=frozenset(), scanned=0)
    return OracleResult(density=best[0], witness=frozenset(best[1]), scanned=scanned)


def _scan_sizes(n: int, cliques: list[tuple[int, ...]], query: VertexSet) -> OracleResult:
    free = [v for v in range(n) if v not in query]
    best: tuple[Fraction, tuple[int, ...]] | None = None
    scanned = 0
    for size in range(len(free), -1, -1):
        for extra in combinations(free, size):
            members = tuple(sorted(query.union(extra)))
            if not members:
                continue
            scanned += 1
            inside = frozenset(members)
            count = sum(1 for c in cliques if inside.issuperset(c))
            density = Fraction(count, len(members))
            if _better(density, members, best):
                best = (density, members)
    if best is None:
        return OracleResult(density=Fraction(0), witness=frozenset(), scanned=0)
    return OracleResult(density=best[0], witness=frozenset(best[1]), scanned=scanned)


def brute_force_densest(
    graph: Graph, k: int, query: Iterable[int] = (), *, scan: ScanOrder = "masks"
) -> OracleResult:
    """Maximize ``c_k(S) / |S|`` over every non-empty S with ``query ⊆ S``.

    ``scan="masks"`` walks subsets as bitmasks with incremental counts;
    ``scan="sizes"`` walks them by decreasing size and recounts each one. The
    two must agree on every field.

    Raises:
        OracleLimitError: The graph has more than 20 vertices.
        VertexDomainError: *query* holds an id outside the graph.
    """
    if graph.n > MAX_ORACLE_VERTICES:
        raise OracleLimitError(graph.n, MAX_ORACLE_VERTICES)
    members = graph.vertex_set(query)
    cliques = brute_force_cliques(graph, k)
    if scan == "masks":
        return _scan_masks(graph.n, cliques, sum(1 << v for v in members))
    return _scan_sizes(graph.n, cliques, members)


def brute_force_cut(network: FlowNetwork) -> int:
    """Minimum s-t cut capacity by trying every source side.

    Raises:
        OracleLimitError: More than 22 non-terminal nodes.
    """
    inner = [v for v in range(network.node_count) if v not in (network.source, network.sink)]
    if len(inner) > MAX_CUT_NODES:
        raise OracleLimitError(len(inner), MAX_CUT_NODES, what="non-terminal nodes")
    best: int | None = None
    for mask in range(1 << len(inner)):
        side = [network.source, *(v for bit, v in enumerate(inner) if mask >> bit & 1)]
        value = cut_capacity(network, side)
        if best is None or value < best:
            best = value
    return best if best is not None else 0


__all__ = [
    "MAX_CUT_NODES",
    "MAX_ORACLE_VERTICES",
    "OracleResult",
    "ScanOrder",
    "brute_force_cliques",
    "brute_force_cut",
    "brute_force_densest",
]
