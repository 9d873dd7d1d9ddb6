# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Exact k-clique-densest subgraph via parametric min cuts.

For a threshold ``alpha`` the network ``H_alpha`` has a source ``s``, one node
per vertex, one node per k-clique and a sink ``t``:

- ``s -> v`` with capacity ``c_v`` (the number of cliques holding v),
- ``v -> C`` with capacity 1 for every clique C holding v,
- ``C -> v`` with capacity ``k - 1`` for each of the k vertices of C,
- ``v -> t`` with capacity ``k * alpha``.

A vertex set A on the source side (cliques placed optimally) costs
``k|C| - k c(A) + k alpha |A|``, so a cut cheaper than the trivial ``{s}`` cut
exists exactly when some set has density above ``alpha``. Capacities are
scaled by the denominator ``D`` of ``k * alpha`` so they stay integral.

With ``k = 2`` (edges as 2-cliques) the same construction solves the classic
densest-subgraph problem.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..cliques import CliqueIndex
from ..config import ExactConfig
from ..exceptions import ParameterError
from ..flow import CutResult, FlowNetwork, max_flow
from ..graph import Graph, VertexSet
from ..utils import get_logger, log_duration
from .result import SolveResult, solve_result


_logger = get_logger("trident.solvers.exact")

Rational = Fraction


# ---------------------------------------------------------------------------
# Network construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class NetworkLayout:
    """Node numbering of ``H_alpha``: s, the vertex layer, the clique layer, t."""

    n: int
    clique_count: int

    source: int = 0

    @property
    def sink(self) -> int:
        return self.n + self.clique_count + 1

    @property
    def node_count(self) -> int:
        return self.n + self.clique_count + 2

    def vertex_node(self, v: int) -> int:
        return 1 + v

    def clique_node(self, i: int) -> int:
        return 1 + self.n + i

    def vertices_on(self, nodes: Iterable[int]) -> VertexSet:
        """Graph vertices whose nodes appear in *nodes*."""
        return frozenset(node - 1 for node in nodes if 1 <= node <= self.n)


class ParametricNetwork:
    """``H_alpha`` built once; only the ``alpha``-dependent capacities move.

    Between thresholds sharing a scale ``D`` only the ``v -> t`` arcs are patched;
    a new ``D`` rescales the fixed capacities once.
    """

    def __init__(self, graph: Graph, index: CliqueIndex, query: VertexSet = frozenset()) -> None:
        if index.n != graph.n:
            raise ParameterError("index.n", index.n, f"index was built for another graph (n={graph.n})")
        self.k = index.k
        self.layout = NetworkLayout(graph.n, len(index))
        layout = self.layout

        network = FlowNetwork(layout.node_count, layout.source, layout.sink)
        forced = graph.n**self.k + 1
        self.source_arcs = [
            network.add_arc(
                layout.source, layout.vertex_node(v), forced if v in query else index.per_vertex_count[v]
            )
            for v in range(graph.n)
        ]
        for i, clique in enumerate(index.cliques):
            node = layout.clique_node(i)
            for v in clique:
                network.add_arc(layout.vertex_node(v), node, 1)
            for v in clique:
                network.add_arc(node, layout.vertex_node(v), self.k - 1)
        self.sink_arcs = [network.add_arc(layout.vertex_node(v), layout.sink, 0) for v in range(graph.n)]

        self._base = list(network.capacities)
        self._network = network
        self._scale = 1

    def network_at(self, alpha: Fraction) -> tuple[FlowNetwork, int]:
        """Return ``H_alpha`` (shared, mutated in place) and its scale ``D``."""
        if alpha < 0:
            raise ParameterError("alpha", alpha, "must be non-negative")
        scaled = self.k * Fraction(alpha)
        scale = scaled.denominator
        if scale != self._scale:
            self._network.capacities = [scale * c for c in self._base]
            self._scale = scale
        for arc in self.sink_arcs:
            self._network.set_capacity(arc, scaled.numerator)
        return self._network, scale


def build_network(
    graph: Graph, index: CliqueIndex, alpha: Fraction, *, query: VertexSet = frozenset()
) -> FlowNetwork:
    """Construct ``H_alpha`` with integer capacities scaled by ``D = denom(k * alpha)``.

    Vertices in *query* get source capacity ``(n^k + 1) * D``, which forces them
    onto the source side of every minimum cut.
    """
    network, _ = ParametricNetwork(graph, index, query).network_at(alpha)
    return network.copy()


def canonical_source_side(layout: NetworkLayout, index: CliqueIndex, members: VertexSet) -> frozenset[int]:
    """Source side induced by *members* with each clique node placed at its cheaper side.

    A clique with j members pays j (sink side) or ``(k - j)(k - 1)`` (source
    side); full cliques always land on the source side, untouched ones on the sink side.
    """
    k = index.k
    nodes = {layout.source}
    nodes.update(layout.vertex_node(v) for v in members)
    for i, clique in enumerate(index.cliques):
        inside = sum(1 for v in clique if v in members)
        if inside and (k - inside) * (k - 1) <= inside:
            nodes.add(layout.clique_node(i))
    return frozenset(nodes)


def cut_cost_formula(graph: Graph, index: CliqueIndex, members: VertexSet, alpha: Fraction) -> Fraction:
    """Closed-form cost (unscaled) of the canonical cut induced by *members*.

    For triangles this is ``sum_{v not in A} t_v + 2 t_2(A) + t_1(A) + 3 alpha |A|``.
    """
    members = graph.vertex_set(members)
    k = index.k
    outside = sum(index.per_vertex_count[v] for v in range(graph.n) if v not in members)
    partial = 0
    for clique in index.cliques:
        inside = sum(1 for v in clique if v in members)
        if 0 < inside < k:
            partial += min(inside, (k - inside) * (k - 1))
    return Fraction(outside + partial) + k * Fraction(alpha) * len(members)


# ---------------------------------------------------------------------------
# Binary search
# ---------------------------------------------------------------------------


def _method_name(k: int, *, constrained: bool) -> str:
    if constrained:
        return "constrained"
    return {2: "ds-exact", 3: "tds-exact"}.get(k, "kds-exact")


def iteration_bound(n: int, k: int) -> int:
    """Upper bound on binary-search steps from the initial bounds ``l = 0, u = n^k``."""
    if n < 2:
        return 0
    return ((n**k) * n * (n - 1) - 1).bit_length() + 1


def _search(
    graph: Graph, index: CliqueIndex, query: VertexSet, config: ExactConfig, *, method: str
) -> SolveResult:
    n, k = graph.n, index.k
    if len(index) == 0:
        _logger.info("no %d-cliques; returning the query set", k, extra={"context": {"n": n, "method": method}})
        return solve_result(graph, index, query, iterations=0, method=method)

    parametric = ParametricNetwork(graph, index, query)
    trivial = k * len(index)

    lo, hi = Fraction(0), Fraction(n**k)
    best = query
    if config.tighten_bounds:
        everything = frozenset(range(n))
        lo, hi = Fraction(index.count_inside(everything), n), Fraction(index.max_count, k)
        best = everything
    gap = Fraction(1, n * (n - 1))

    iterations = 0
    context = {"n": n, "m": graph.m, "k": k, "cliques": len(index), "query": len(query), "method": method}
    with log_duration(_logger, "exact solve finished", context=context) as ctx:
        while hi >= lo + gap:
            alpha = (lo + hi) / 2
            network, scale = parametric.network_at(alpha)
            cut: CutResult = max_flow(network, config.flow)
            iterations += 1
            candidate = parametric.layout.vertices_on(cut.source_side)
            feasible = bool(candidate) and cut.max_flow_value <= trivial * scale
            _logger.debug(
                "alpha=%s cut=%d trivial=%d side=%d feasible=%s",
                alpha,
                cut.max_flow_value,
                trivial * scale,
                len(candidate),
                feasible,
            )
            if feasible:
                lo, best = alpha, candidate
            else:
                hi = alpha
        result = solve_result(graph, index, best, iterations=iterations, method=method)
        ctx.update(iterations=iterations, size=len(best), density=str(result.density))
    return result


def solve_exact(graph: Graph, index: CliqueIndex, *, config: ExactConfig | None = None) -> SolveResult:
    """Find a set maximizing ``c_k(S) / |S|`` exactly.

    Binary search over ``alpha`` in ``[0, n^k]``; each step takes the maximal
    min cut of ``H_alpha`` and keeps its vertex layer whenever it beats the
    trivial cut. The search stops once the interval is narrower than
    ``1 / (n(n - 1))``, the smallest gap between two distinct densities.

    A graph without k-cliques yields the empty set, density 0 and
    ``no_clique=True``.
    """
    method = _method_name(index.k, constrained=False)
    return _search(graph, index, frozenset(), config or ExactConfig(), method=method)


def solve_constrained(
    graph: Graph, index: CliqueIndex, query: Iterable[int], *, config: ExactConfig | None = None
) -> SolveResult:
    """Densest superset of *query*: maximize ``c_k(S) / |S|`` over ``query ⊆ S``."""
    members = graph.vertex_set(query)
    method = _method_name(index.k, constrained=bool(members))
    return _search(graph, index, members, config or ExactConfig(), method=method)


__all__ = [
    "NetworkLayout",
    "ParametricNetwork",
    "Rational",
    "build_network",
    "canonical_source_side",
    "cut_cost_formula",
    "iteration_bound",
    "solve_constrained",
    "solve_exact",
]
