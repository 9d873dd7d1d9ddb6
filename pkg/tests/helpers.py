# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Shared graph builders and hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st
import networkx as nx

from trident import Graph


DENSITIES = (0.3, 0.5, 0.7)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(combinations(range(n), 2), n=n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(((u, a + v) for u in range(a) for v in range(b)), n=a + b)


def star(leaves: int) -> Graph:
    return Graph.from_edges(((0, v) for v in range(1, leaves + 1)), n=leaves + 1)


def cycle(n: int) -> Graph:
    return Graph.from_edges(((v, (v + 1) % n) for v in range(n)), n=n)


def disjoint_union(*parts: Graph) -> Graph:
    """Place *parts* side by side; ids of later parts are shifted past earlier ones."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for part in parts:
        edges.extend((offset + u, offset + v) for u, v in part.edges())
        offset += part.n
    return Graph.from_edges(edges, n=offset)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def seeded_corpus(count: int, *, min_n: int = 3, max_n: int = 9) -> list[Graph]:
    """Deterministic G(n, p) graphs cycling through sizes and densities."""
    span = max_n - min_n + 1
    return [gnp_graph(min_n + seed % span, DENSITIES[seed % len(DENSITIES)], seed) for seed in range(count)]


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = draw(st.sampled_from(DENSITIES))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return gnp_graph(n, p, seed)


@st.composite
def graphs_with_subset(draw: st.DrawFn, min_n: int = 1, max_n: int = 9) -> tuple[Graph, frozenset[int]]:
    graph = draw(graphs(min_n=min_n, max_n=max_n))
    members = draw(st.frozensets(st.integers(min_value=0, max_value=graph.n - 1))) if graph.n else frozenset()
    return graph, members


__all__ = [
    "DENSITIES",
    "complete_bipartite",
    "complete_graph",
    "cycle",
    "disjoint_union",
    "gnp_graph",
    "graphs",
    "graphs_with_subset",
    "seeded_corpus",
    "star",
]
