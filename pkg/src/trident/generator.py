# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Planted-clique instances: G(n, p) with a clique on ceil(n^gamma) random vertices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import math
import random

import networkx as nx

from .exceptions import ParameterError


@dataclass(frozen=True, slots=True)
class PlantedInstance:
    """A generated graph plus the vertices of its planted clique.

    Vertices are ``0..n-1`` and are written as decimal labels. Vertices left
    without edges do not appear in the edge list.
    """

    n: int
    p: float
    gamma: float
    seed: int
    edges: tuple[tuple[int, int], ...]
    planted: tuple[int, ...]

    def edge_list_text(self) -> str:
        header = f"# G(n={self.n}, p={self.p}) + K{len(self.planted)} planted, gamma={self.gamma}, seed={self.seed}\n"
        return header + "".join(f"{u} {v}\n" for u, v in self.edges)

    def sidecar_text(self) -> str:
        return "".join(f"{v}\n" for v in self.planted)


def planted_size(n: int, gamma: float) -> int:
    # float noise just above an integer must not bump the ceiling
    return min(n, math.ceil(round(n**gamma, 9)))


def gen_planted(n: int, p: float, gamma: float, seed: int) -> PlantedInstance:
    """Erdős–Rényi ``G(n, p)`` with a clique overlaid on ``ceil(n**gamma)`` uniform vertices.

    The same arguments always give the same instance.

    Raises:
        ParameterError: ``n < 1``, ``p`` outside ``[0, 1)`` or ``gamma`` outside ``(0, 1)``.
    """
    if n < 1:
        raise ParameterError("n", n, "must be positive")
    if not 0 <= p < 1:
        raise ParameterError("p", p, "must satisfy 0 <= p < 1")
    if not 0 < gamma < 1:
        raise ParameterError("gamma", gamma, "must satisfy 0 < gamma < 1")

    graph = nx.gnp_random_graph(n, p, seed=seed)
    planted = tuple(sorted(random.Random(seed).sample(range(n), planted_size(n, gamma))))
    graph.add_edges_from(combinations(planted, 2))
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in graph.edges()))
    return PlantedInstance(n=n, p=p, gamma=gamma, seed=seed, edges=edges, planted=planted)


__all__ = ["PlantedInstance", "gen_planted", "planted_size"]
