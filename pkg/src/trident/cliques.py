# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Triangle and k-clique enumeration with per-vertex participation counts.

Edges are oriented from the lower-ranked to the higher-ranked endpoint, where
rank is ``(degree, id)``. Every clique is then found exactly once, from its
lowest-ranked vertex, by intersecting out-neighborhoods; out-degrees are
``O(sqrt(m))`` under this orientation, which keeps triangle listing within
``O(m^{3/2})``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import logging
from typing import Final

from .exceptions import ParameterError
from .graph import Graph, VertexSet
from .utils import get_logger, log_duration


_logger = get_logger("trident.cliques")

MIN_K: Final[int] = 2
MAX_K: Final[int] = 8


@dataclass(frozen=True, slots=True)
class CliqueIndex:
    """Enumerated k-cliques of a graph with per-vertex membership.

    Attributes:
        k: Clique order (2 means edges).
        n: Vertex count of the indexed graph.
        cliques: Strictly increasing k-tuples in lexicographic order.
        per_vertex_count: ``c_v`` (``t_v`` for triangles) for every vertex.
        per_vertex_membership: Indices into ``cliques`` containing each vertex.
    """

    k: int
    n: int
    cliques: tuple[tuple[int, ...], ...]
    per_vertex_count: tuple[int, ...]
    per_vertex_membership: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cliques(cls, k: int, n: int, cliques: Iterable[tuple[int, ...]]) -> CliqueIndex:
        ordered = tuple(sorted(tuple(sorted(c)) for c in cliques))
        membership: list[list[int]] = [[] for _ in range(n)]
        for position, clique in enumerate(ordered):
            for v in clique:
                membership[v].append(position)
        return cls(
            k=k,
            n=n,
            cliques=ordered,
            per_vertex_count=tuple(len(ids) for ids in membership),
            per_vertex_membership=tuple(tuple(ids) for ids in membership),
        )

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def max_count(self) -> int:
        return max(self.per_vertex_count, default=0)

    def count_inside(self, members: VertexSet) -> int:
        """Number of cliques lying fully inside *members*."""
        if len(members) * 2 < self.n:
            seen: set[int] = set()
            for v in members:
                seen.update(i for i in self.per_vertex_membership[v] if all(u in members for u in self.cliques[i]))
            return len(seen)
        return sum(1 for clique in self.cliques if all(u in members for u in clique))

    def counts_within(self, members: VertexSet) -> dict[int, int]:
        """Per-vertex count of cliques fully inside *members*, for v in *members*."""
        counts = dict.fromkeys(members, 0)
        for v in members:
            counts[v] = sum(
                1 for i in self.per_vertex_membership[v] if all(u in members for u in self.cliques[i])
            )
        return counts


@dataclass(frozen=True, slots=True)
class TriangleTypeCounts:
    """Triangles touching a set S, split by how many of their vertices lie in S."""

    t1: int
    t2: int
    t3: int


# ---------------------------------------------------------------------------
# Orientation
# ---------------------------------------------------------------------------


def _oriented_out_sets(graph: Graph) -> list[frozenset[int]]:
    def rank(v: int) -> tuple[int, int]:
        return (graph.degree(v), v)

    return [frozenset(w for w in graph.adjacency[v] if rank(v) < rank(w)) for v in range(graph.n)]


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def list_triangles(graph: Graph) -> CliqueIndex:
    """List every triangle exactly once (lexicographic sorted triples)."""
    context = {"n": graph.n, "m": graph.m}
    with log_duration(_logger, "listed triangles", level=logging.DEBUG, context=context) as ctx:
        out = _oriented_out_sets(graph)
        triangles: list[tuple[int, int, int]] = []
        for u in range(graph.n):
            out_u = out[u]
            for v in out_u:
                for w in out_u & out[v]:
                    a, b, c = sorted((u, v, w))
                    triangles.append((a, b, c))
        index = CliqueIndex.from_cliques(3, graph.n, triangles)
        ctx["triangles"] = len(index)
    return index


def list_kcliques(graph: Graph, k: int) -> CliqueIndex:
    """List every k-clique exactly once for ``3 <= k <= 8``.

    Raises:
        ParameterError: *k* is outside ``[3, 8]``.
    """
    if not 3 <= k <= MAX_K:
        raise ParameterError("k", k, f"k-clique listing needs 3 <= k <= {MAX_K}")
    if k == 3:
        return list_triangles(graph)

    context = {"n": graph.n, "m": graph.m, "k": k}
    with log_duration(_logger, "listed k-cliques", level=logging.DEBUG, context=context) as ctx:
        out = _oriented_out_sets(graph)
        found: list[tuple[int, ...]] = []

        # Explicit stack of (partial clique, common out-neighbors); each clique is
        # grown only through higher-ranked vertices, so it is emitted once.
        stack: list[tuple[tuple[int, ...], frozenset[int]]] = [((u,), out[u]) for u in range(graph.n)]
        while stack:
            partial, candidates = stack.pop()
            if len(partial) == k - 1:
                found.extend((*partial, w) for w in candidates)
                continue
            if len(candidates) < k - len(partial):
                continue
            for v in candidates:
                stack.append(((*partial, v), candidates & out[v]))

        index = CliqueIndex.from_cliques(k, graph.n, found)
        ctx["cliques"] = len(index)
    return index


def edge_index(graph: Graph) -> CliqueIndex:
    """Edges as 2-cliques, for the densest-subgraph configuration."""
    return CliqueIndex.from_cliques(2, graph.n, graph.edges())


def clique_index(graph: Graph, k: int) -> CliqueIndex:
    """Dispatch to the right enumerator for ``2 <= k <= 8``."""
    if not MIN_K <= k <= MAX_K:
        raise ParameterError("k", k, f"clique order must satisfy {MIN_K} <= k <= {MAX_K}")
    if k == 2:
        return edge_index(graph)
    if k == 3:
        return list_triangles(graph)
    return list_kcliques(graph, k)


def triangle_type_counts(index: CliqueIndex, members: VertexSet) -> TriangleTypeCounts:
    """Classify the triangles touching *members* by ``|triangle ∩ members|``.

    Raises:
        ParameterError: *index* does not hold triangles.
    """
    if index.k != 3:
        raise ParameterError("index.k", index.k, "triangle types need a triangle index")
    by_type = [0, 0, 0, 0]
    for triangle in index.cliques:
        by_type[sum(1 for v in triangle if v in members)] += 1
    return TriangleTypeCounts(t1=by_type[1], t2=by_type[2], t3=by_type[3])


def format_cliques(graph: Graph, index: CliqueIndex) -> str:
    """One clique per line, tab-separated labels."""
    return "".join("\t".join(graph.labels[v] for v in clique) + "\n" for clique in index.cliques)


__all__ = [
    "MAX_K",
    "MIN_K",
    "CliqueIndex",
    "TriangleTypeCounts",
    "clique_index",
    "edge_index",
    "format_cliques",
    "list_kcliques",
    "list_triangles",
    "triangle_type_counts",
]
