# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Greedy peeling approximations for the k-clique-densest subgraph.

- :func:`peel` removes the live vertex in the fewest live cliques, one at a
  time, and returns the densest intermediate set (a 1/k-approximation).
- :func:`batch_peel` removes, per round, every vertex whose live count is at
  most ``k(1 + eps)`` times the current density (a 1/(k + k eps)-approximation
  in ``O(log_{1+eps} n)`` rounds).
- :func:`greedy_ds` is single-vertex peeling on edges: the 1/2-approximation
  for the densest-subgraph problem.
- :func:`grow_from_query` builds up from a query set instead of peeling down to it.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
import heapq

from ..cliques import CliqueIndex, edge_index
from ..config import PeelConfig
from ..exceptions import ParameterError
from ..graph import Graph, VertexSet
from ..utils import get_logger, log_duration
from .result import SolveResult, solve_result


_logger = get_logger("trident.solvers.peeling")


# ---------------------------------------------------------------------------
# Data structures
# ---------------------------------------------------------------------------


class PeelBuckets:
    """Live clique counts with a bucket directory keyed by count.

    Every live, unprotected vertex sits in ``buckets[counts[v]]``. Removing a
    vertex retires its live cliques and decrements the co-members' counts;
    ``min_pointer`` never exceeds the true minimum and is advanced lazily.
    Each bucket keeps a min-heap of ids beside its set so the smallest id pops
    in logarithmic time; heap entries whose vertex has left the bucket are
    dropped when they surface.
    """

    def __init__(self, index: CliqueIndex, protected: VertexSet = frozenset()) -> None:
        self._index = index
        self.protected = protected
        self.counts = list(index.per_vertex_count)
        self.live: set[int] = set(range(index.n))
        self.clique_alive = [True] * len(index)
        self.live_cliques = len(index)
        self.buckets: list[set[int]] = [set() for _ in range(index.max_count + 1)]
        # ids are appended in increasing order, so every list starts out a valid heap
        self._order: list[list[int]] = [[] for _ in range(index.max_count + 1)]
        for v in range(index.n):
            if v not in protected:
                self.buckets[self.counts[v]].add(v)
                self._order[self.counts[v]].append(v)
        self.min_pointer = 0

    @property
    def density(self) -> Fraction:
        if not self.live:
            return Fraction(0)
        return Fraction(self.live_cliques, len(self.live))

    def removable(self) -> int:
        return len(self.live) - len(self.protected & self.live)

    def pop_min(self) -> tuple[int, int] | None:
        """Take the removable vertex with the smallest count (ties: smallest id)."""
        while self.min_pointer < len(self.buckets):
            members, order = self.buckets[self.min_pointer], self._order[self.min_pointer]
            while order and order[0] not in members:
                heapq.heappop(order)
            if order:
                break
            self.min_pointer += 1
        else:
            return None
        count = self.min_pointer
        v = heapq.heappop(self._order[count])
        self.remove(v)
        return v, count

    def remove(self, v: int) -> None:
        self.remove_many((v,))

    def remove_many(self, vertices: Iterable[int]) -> None:
        """Remove a batch at once; counts are updated after the whole batch leaves."""
        batch = [v for v in vertices if v in self.live]
        for v in batch:
            self.live.discard(v)
            if v not in self.protected:
                self.buckets[self.counts[v]].discard(v)

        cliques, membership = self._index.cliques, self._index.per_vertex_membership
        for v in batch:
            for i in membership[v]:
                if not self.clique_alive[i]:
                    continue
                self.clique_alive[i] = False
                self.live_cliques -= 1
                for u in cliques[i]:
                    self.counts[u] -= 1
                    if u in self.live and u not in self.protected:
                        self._move(u, self.counts[u] + 1)

    def _move(self, u: int, old: int) -> None:
        self.buckets[old].discard(u)
        new = self.counts[u]
        self.buckets[new].add(u)
        heapq.heappush(self._order[new], u)
        self.min_pointer = min(self.min_pointer, new)


@dataclass(slots=True)
class PeelTrace:
    """Removal history of a single-vertex peel.

    ``densities[i]`` is the density after ``i`` removals (``densities[0]`` is
    the whole graph); ``best_index`` is the number of removals behind the
    returned set.
    """

    removals: list[tuple[int, int]] = field(default_factory=list)
    densities: list[Fraction] = field(default_factory=list)
    best_index: int = 0

    def rows(self, graph: Graph) -> list[tuple[int, str, int, int, int]]:
        """CSV rows ``(step, removed_label, count, density_num, density_den)``."""
        return [
            (step, graph.labels[v], count, density.numerator, density.denominator)
            for step, ((v, count), density) in enumerate(zip(self.removals, self.densities[1:]), start=1)
        ]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _peel_method(k: int) -> str:
    return {2: "ds-peel", 3: "tds-peel"}.get(k, "kds-peel")


def as_epsilon(value: Fraction | float | str) -> Fraction:
    """Exact epsilon; floats go through their shortest repr so 0.1 means 1/10."""
    epsilon = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    if epsilon <= 0:
        raise ParameterError("epsilon", value, "must be positive")
    return epsilon


def batch_round_bound(n: int, epsilon: Fraction | float | str) -> int:
    """``ceil(log_{1+eps} n) + 1``, computed exactly."""
    growth = 1 + as_epsilon(epsilon)
    rounds, power = 0, Fraction(1)
    while power < n:
        power *= growth
        rounds += 1
    return rounds + 1


# ---------------------------------------------------------------------------
# Single-vertex peeling
# ---------------------------------------------------------------------------


def peel(
    graph: Graph, index: CliqueIndex, protected: Iterable[int] = (), *, config: PeelConfig | None = None
) -> tuple[SolveResult, PeelTrace]:
    """Peel minimum-count vertices and return the densest intermediate set.

    Vertices in *protected* are never removed, so the result always contains
    them. Among equally dense intermediate sets the smaller one wins.
    """
    config = config or PeelConfig()
    keep = graph.vertex_set(protected)
    buckets = PeelBuckets(index, keep)
    trace = PeelTrace(densities=[buckets.density])

    best_density, best_index = buckets.density, 0
    order: list[int] = []
    context = {"n": graph.n, "k": index.k, "cliques": len(index), "protected": len(keep)}
    with log_duration(_logger, "peel finished", context=context) as ctx:
        while buckets.removable() > 0 and len(buckets.live) > 1:
            popped = buckets.pop_min()
            if popped is None:
                break
            order.append(popped[0])
            density = buckets.density
            if config.record_trace:
                trace.removals.append(popped)
                trace.densities.append(density)
            if density >= best_density:
                best_density, best_index = density, len(order)

        best_set = frozenset(range(graph.n)) - frozenset(order[:best_index])
        trace.best_index = best_index
        result = solve_result(graph, index, best_set, iterations=len(order), method=_peel_method(index.k))
        ctx.update(removals=len(order), size=len(best_set), density=str(result.density))
    return result, trace


def greedy_ds(graph: Graph) -> tuple[SolveResult, PeelTrace]:
    """Minimum-degree peeling: the 1/2-approximation for ``max e(S) / |S|``."""
    return peel(graph, edge_index(graph))


# ---------------------------------------------------------------------------
# Batch peeling
# ---------------------------------------------------------------------------


def batch_peel(
    graph: Graph, index: CliqueIndex, epsilon: Fraction | float | str
) -> tuple[SolveResult, int]:
    """Peel in rounds; each round drops every vertex with count <= k(1+eps)h_k(S).

    The threshold comparison is exact. The whole graph is the initial best set
    and a later set replaces it when at least as dense.

    Raises:
        ParameterError: *epsilon* is not positive.
    """
    eps = as_epsilon(epsilon)
    k = index.k
    buckets = PeelBuckets(index)
    best, best_density = frozenset(buckets.live), buckets.density
    rounds = 0

    context = {"n": graph.n, "k": k, "cliques": len(index), "epsilon": str(eps)}
    with log_duration(_logger, "batch peel finished", context=context) as ctx:
        while buckets.live:
            # count <= k(1+eps) * live_cliques / |S|, multiplied through by |S|
            size = len(buckets.live)
            bound = k * (1 + eps) * buckets.live_cliques
            doomed = [v for v in sorted(buckets.live) if buckets.counts[v] * size <= bound]
            buckets.remove_many(doomed)
            rounds += 1
            _logger.debug("round %d removed %d of %d", rounds, len(doomed), size)
            if buckets.live and buckets.density >= best_density:
                best, best_density = frozenset(buckets.live), buckets.density

        method = _peel_method(k).replace("peel", "batch")
        result = solve_result(graph, index, best, iterations=rounds, method=method)
        ctx.update(rounds=rounds, size=len(best), density=str(result.density))
    return result, rounds


# ---------------------------------------------------------------------------
# Build-up from a query set
# ---------------------------------------------------------------------------


def grow_from_query(graph: Graph, index: CliqueIndex, query: Iterable[int]) -> SolveResult:
    """Grow from *query*, each step adding the vertex that closes the most cliques.

    Returns the densest prefix (ties: the smaller set). Every prefix contains
    *query*; no approximation guarantee is claimed.

    Raises:
        ParameterError: *query* is empty.
    """
    start = graph.vertex_set(query)
    if not start:
        raise ParameterError("query", sorted(start), "growing needs a non-empty query set")
    k = index.k
    cliques, membership = index.cliques, index.per_vertex_membership

    inside = [sum(1 for v in clique if v in start) for clique in cliques]
    completed = sum(1 for count in inside if count == k)
    gain = [0] * graph.n
    for i, count in enumerate(inside):
        if count == k - 1:
            gain[next(v for v in cliques[i] if v not in start)] += 1

    heap = [(-gain[v], v) for v in range(graph.n) if v not in start]
    heapq.heapify(heap)
    chosen = set(start)
    order: list[int] = []
    best_density, best_index = Fraction(completed, len(chosen)), 0

    while heap:
        negative, v = heapq.heappop(heap)
        if v in chosen or -negative != gain[v]:
            continue
        chosen.add(v)
        order.append(v)
        for i in membership[v]:
            inside[i] += 1
            if inside[i] == k:
                completed += 1
            elif inside[i] == k - 1:
                u = next(w for w in cliques[i] if w not in chosen)
                gain[u] += 1
                heapq.heappush(heap, (-gain[u], u))
        density = Fraction(completed, len(chosen))
        if density > best_density:
            best_density, best_index = density, len(order)

    best_set = start | frozenset(order[:best_index])
    return solve_result(graph, index, best_set, iterations=len(order), method="grow")


__all__ = [
    "PeelBuckets",
    "PeelTrace",
    "as_epsilon",
    "batch_peel",
    "batch_round_bound",
    "greedy_ds",
    "grow_from_query",
    "peel",
]
