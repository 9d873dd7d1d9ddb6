# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Immutable undirected simple graphs, edge-list loading, and density reports.

Vertices carry dense internal ids ``0..n-1`` assigned in first-appearance order;
the original labels are kept for output. Every solver reads a :class:`Graph`
and describes its answer as a ``VertexSet`` (a frozenset of internal ids).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
import io
from math import comb
from pathlib import Path
import sys
from typing import IO, TYPE_CHECKING, Any, TypeAlias

from pydantic import BaseModel, ConfigDict, Field

from .exceptions import EdgeListParseError, ParameterError, VertexDomainError


if TYPE_CHECKING:
    import networkx as nx

    from .cliques import CliqueIndex


VertexSet: TypeAlias = frozenset[int]

COMMENT_PREFIXES: tuple[str, ...] = ("#", "%")


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph in compressed adjacency form.

    Invariants: no self-loops, no parallel edges, symmetric adjacency, each
    neighbor tuple sorted ascending, and ``sum(len(a) for a in adjacency) == 2 * m``.
    """

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    neighbor_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    label_index: Mapping[str, int] = field(repr=False, compare=False)

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], *, labels: Iterable[str] | None = None, n: int | None = None
    ) -> Graph:
        """Build a graph from internal-id edges, dropping loops and duplicates.

        Args:
            edges: Pairs of vertex ids.
            labels: Optional label per id; defaults to ``str(id)``.
            n: Vertex count; defaults to ``len(labels)`` or ``max id + 1``.
        """
        edge_list = list(edges)
        label_list = list(labels) if labels is not None else None
        if n is None:
            if label_list is not None:
                n = len(label_list)
            else:
                n = 1 + max((max(u, v) for u, v in edge_list), default=-1)
        if label_list is None:
            label_list = [str(v) for v in range(n)]
        if len(label_list) != n:
            raise ValueError(f"expected {n} labels, got {len(label_list)}")

        neighbors: list[set[int]] = [set() for _ in range(n)]
        bad = {v for pair in edge_list for v in pair if not 0 <= v < n}
        if bad:
            raise VertexDomainError(bad, n)
        for u, v in edge_list:
            if u != v:
                neighbors[u].add(v)
                neighbors[v].add(u)

        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        m = sum(len(nbrs) for nbrs in adjacency) // 2
        return cls(
            n=n,
            m=m,
            adjacency=adjacency,
            labels=tuple(label_list),
            neighbor_sets=tuple(frozenset(nbrs) for nbrs in neighbors),
            label_index={label: i for i, label in enumerate(label_list)},
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph; node order follows ``graph.nodes``."""
        nodes = list(graph.nodes)
        position = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            ((position[u], position[v]) for u, v in graph.edges), labels=[str(node) for node in nodes]
        )

    def to_networkx(self) -> nx.Graph:
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def induced_edge_count(self, members: VertexSet) -> int:
        return sum(len(self.neighbor_sets[v] & members) for v in members) // 2

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        """Validate *ids* against the graph and freeze them."""
        members = frozenset(ids)
        bad = {v for v in members if not 0 <= v < self.n}
        if bad:
            raise VertexDomainError(bad, self.n)
        return members

    def vertex_set_from_labels(self, labels: Iterable[str]) -> VertexSet:
        wanted = list(labels)
        missing = [label for label in wanted if label not in self.label_index]
        if missing:
            raise ParameterError("labels", missing, "not present in the graph")
        return frozenset(self.label_index[label] for label in wanted)

    def labels_of(self, members: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(members)]


# ---------------------------------------------------------------------------
# Edge-list input
# ---------------------------------------------------------------------------


def load_edge_list(source: bytes | str | IO[bytes] | IO[str]) -> Graph:
    """Parse an edge list into a :class:`Graph`.

    Each non-blank line that does not start with ``#`` or ``%`` must hold exactly
    two whitespace-separated labels. Duplicate edges (in either orientation)
    and self-loops are dropped; a label exists only once it appears in an edge.

    Raises:
        EdgeListParseError: A line is not valid UTF-8 or holds other than two tokens.
    """
    if isinstance(source, bytes):
        stream: IO[Any] = io.BytesIO(source)
    elif isinstance(source, str):
        stream = io.StringIO(source)
    else:
        stream = source

    position: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []

    for line_number, raw in enumerate(stream, start=1):
        text = raw
        if isinstance(raw, bytes):
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                shown = raw.decode("utf-8", "replace").strip()
                raise EdgeListParseError(line_number, shown, "not valid UTF-8") from exc
        line = text.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_number, line)
        left, right = tokens
        if left == right:
            continue
        ids = []
        for label in (left, right):
            if label not in position:
                position[label] = len(labels)
                labels.append(label)
            ids.append(position[label])
        edges.append((ids[0], ids[1]))

    return Graph.from_edges(edges, labels=labels)


def read_edge_list(path: str | Path) -> Graph:
    """Load an edge-list file; ``"-"`` reads standard input."""
    if str(path) == "-":
        return load_edge_list(sys.stdin.buffer)
    with Path(path).open("rb") as handle:
        return load_edge_list(handle)


def format_edge_list(graph: Graph) -> str:
    return "".join(f"{graph.labels[u]} {graph.labels[v]}\n" for u, v in graph.edges())


# ---------------------------------------------------------------------------
# Density reports
# ---------------------------------------------------------------------------


def _ratio(numerator: int, denominator: int) -> Fraction:
    return Fraction(numerator, denominator) if denominator else Fraction(0)


@dataclass(frozen=True, slots=True)
class DensityReport:
    """Exact density measures of an induced subgraph (one row of the comparison table).

    ``cliques`` counts induced k-cliques (triangles when ``k == 3``). ``f_t`` is
    ``cliques / C(size, k)``, ``tau`` is ``cliques / size`` and ``tpv`` is
    ``k * tau``. Degenerate denominators give 0.
    """

    members: VertexSet
    k: int
    size: int
    edges: int
    cliques: int
    f_e: Fraction
    f_t: Fraction
    delta: Fraction
    tau: Fraction
    tpv: Fraction

    @property
    def density(self) -> Fraction:
        return self.tau

    def to_payload(self, graph: Graph) -> ReportPayload:
        return ReportPayload(
            size=self.size,
            edges=self.edges,
            cliques=self.cliques,
            k=self.k,
            f_e=float(self.f_e),
            f_t=float(self.f_t),
            delta=float(self.delta),
            tau=float(self.tau),
            tpv=float(self.tpv),
            vertices=graph.labels_of(self.members),
        )


class ReportPayload(BaseModel):
    """Wire form of a :class:`DensityReport`."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    size: int = Field(..., ge=0)
    edges: int = Field(..., ge=0)
    cliques: int = Field(..., ge=0)
    k: int = Field(..., ge=2, le=8)
    f_e: float = Field(..., ge=0.0, le=1.0)
    f_t: float = Field(..., ge=0.0, le=1.0)
    delta: float = Field(..., ge=0.0)
    tau: float = Field(..., ge=0.0)
    tpv: float = Field(..., ge=0.0)
    vertices: list[str]


def report_json_schema() -> dict[str, Any]:
    return ReportPayload.model_json_schema()


def build_report(graph: Graph, members: VertexSet, *, k: int, cliques: int) -> DensityReport:
    s = len(members)
    edges = graph.induced_edge_count(members)
    tau = _ratio(cliques, s)
    return DensityReport(
        members=members,
        k=k,
        size=s,
        edges=edges,
        cliques=cliques,
        f_e=_ratio(edges, comb(s, 2)) if s >= 2 else Fraction(0),
        f_t=_ratio(cliques, comb(s, k)) if s >= k else Fraction(0),
        delta=_ratio(2 * edges, s),
        tau=tau,
        tpv=k * tau,
    )


def density_report(graph: Graph, members: Iterable[int], index: CliqueIndex) -> DensityReport:
    """Compute every density measure of the subgraph induced by *members*.

    Only cliques lying fully inside *members* are counted.

    Raises:
        VertexDomainError: *members* holds an id outside ``0..n-1``.
    """
    subset = graph.vertex_set(members)
    return build_report(graph, subset, k=index.k, cliques=index.count_inside(subset))


__all__ = [
    "COMMENT_PREFIXES",
    "DensityReport",
    "Graph",
    "ReportPayload",
    "VertexSet",
    "build_report",
    "density_report",
    "format_edge_list",
    "load_edge_list",
    "read_edge_list",
    "report_json_schema",
]
