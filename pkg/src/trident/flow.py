# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Exact max-flow / min-cut over integer-capacity networks.

The engine is Dinic's algorithm: BFS level graphs plus blocking flows found by
an iterative DFS with current-arc pointers. Arcs are stored in pairs, so arc
``e`` and its residual twin ``e ^ 1`` sit next to each other.

After the flow is maximal the engine reports the *maximal* source side of a
minimum cut: every node that cannot reach the sink in the residual graph.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .config import FlowConfig
from .exceptions import CapacityOverflowError, FlowInvariantError, ParameterError


# ---------------------------------------------------------------------------
# Data model
# ---------------------------------------------------------------------------


@dataclass(slots=True)
class FlowNetwork:
    """Directed network with paired residual arcs.

    Forward arc ``i`` is stored at slot ``2 * i``; slot ``2 * i + 1`` is its
    residual twin with capacity 0. No arc may enter the source or leave the sink.
    """

    node_count: int
    source: int
    sink: int
    heads: list[int] = field(default_factory=list)
    capacities: list[int] = field(default_factory=list)
    outgoing: list[list[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.source == self.sink:
            raise ParameterError("sink", self.sink, "source and sink must differ")
        for terminal in (self.source, self.sink):
            if not 0 <= terminal < self.node_count:
                raise ParameterError("terminal", terminal, f"must be a node id below {self.node_count}")
        if not self.outgoing:
            self.outgoing = [[] for _ in range(self.node_count)]

    @property
    def arc_count(self) -> int:
        return len(self.heads) // 2

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        """Add ``tail -> head`` and return its forward arc index."""
        if capacity < 0:
            raise ParameterError("capacity", capacity, "must be non-negative")
        if head == self.source or tail == self.sink:
            raise ParameterError("arc", (tail, head), "arcs may not enter the source or leave the sink")
        slot = len(self.heads)
        self.heads.extend((head, tail))
        self.capacities.extend((capacity, 0))
        self.outgoing[tail].append(slot)
        self.outgoing[head].append(slot + 1)
        return slot // 2

    def set_capacity(self, arc: int, capacity: int) -> None:
        if capacity < 0:
            raise ParameterError("capacity", capacity, "must be non-negative")
        self.capacities[2 * arc] = capacity

    def capacity(self, arc: int) -> int:
        return self.capacities[2 * arc]

    def tail(self, arc: int) -> int:
        return self.heads[2 * arc + 1]

    def head(self, arc: int) -> int:
        return self.heads[2 * arc]

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(tail, head, capacity)`` for each forward arc."""
        for arc in range(self.arc_count):
            yield self.tail(arc), self.head(arc), self.capacity(arc)

    def copy(self) -> FlowNetwork:
        return FlowNetwork(
            node_count=self.node_count,
            source=self.source,
            sink=self.sink,
            heads=list(self.heads),
            capacities=list(self.capacities),
            outgoing=[list(slots) for slots in self.outgoing],
        )

    def scaled(self, factor: int) -> FlowNetwork:
        """Copy with every capacity multiplied by a positive integer."""
        if factor < 1:
            raise ParameterError("factor", factor, "must be a positive integer")
        clone = self.copy()
        clone.capacities = [factor * c for c in clone.capacities]
        return clone


@dataclass(frozen=True, slots=True)
class CutResult:
    """Maximum flow and the maximal minimum cut.

    ``arc_flows[i]`` is the flow on forward arc ``i``.
    """

    max_flow_value: int
    source_side: frozenset[int]
    cut_capacity: int
    arc_flows: tuple[int, ...]


def cut_capacity(network: FlowNetwork, source_side: Iterable[int]) -> int:
    """Total capacity of forward arcs leaving *source_side*."""
    side = frozenset(source_side)
    return sum(cap for tail, head, cap in network.arcs() if tail in side and head not in side)


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


def _check_width(value: int, config: FlowConfig) -> None:
    if config.capacity_bits is not None and value >= 1 << config.capacity_bits:
        raise CapacityOverflowError(value, config.capacity_bits)


def _levels(network: FlowNetwork, residual: list[int]) -> list[int]:
    level = [-1] * network.node_count
    level[network.source] = 0
    queue = deque([network.source])
    heads, outgoing = network.heads, network.outgoing
    while queue:
        u = queue.popleft()
        for slot in outgoing[u]:
            v = heads[slot]
            if residual[slot] > 0 and level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def _blocking_flow(network: FlowNetwork, residual: list[int], level: list[int]) -> int:
    heads, outgoing = network.heads, network.outgoing
    source, sink = network.source, network.sink
    pointer = [0] * network.node_count
    total = 0
    path: list[int] = []
    u = source
    while True:
        if u == sink:
            pushed = min(residual[slot] for slot in path)
            for slot in path:
                residual[slot] -= pushed
                residual[slot ^ 1] += pushed
            total += pushed
            path.clear()
            u = source
            continue

        slots = outgoing[u]
        while pointer[u] < len(slots):
            slot = slots[pointer[u]]
            if residual[slot] > 0 and level[heads[slot]] == level[u] + 1:
                break
            pointer[u] += 1
        else:
            # dead end: retreat one arc and skip it from now on
            if u == source:
                return total
            level[u] = -1
            slot = path.pop()
            u = heads[slot ^ 1]
            pointer[u] += 1
            continue

        path.append(slot)
        u = heads[slot]


def _reaches_sink(network: FlowNetwork, residual: list[int]) -> set[int]:
    heads, outgoing = network.heads, network.outgoing
    seen = {network.sink}
    queue = deque([network.sink])
    while queue:
        v = queue.popleft()
        for slot in outgoing[v]:
            # slot ^ 1 runs u -> v; u reaches the sink through it if it has residual room
            u = heads[slot]
            if u not in seen and residual[slot ^ 1] > 0:
                seen.add(u)
                queue.append(u)
    return seen


def max_flow(network: FlowNetwork, config: FlowConfig | None = None) -> CutResult:
    """Compute a maximum s-t flow and the maximal source side of a minimum cut.

    The returned ``source_side`` is the complement of the nodes that can reach
    the sink in the final residual graph: the largest source side among all
    minimum cuts.

    Raises:
        CapacityOverflowError: A capacity or the flow value does not fit in
            ``config.capacity_bits``.
        FlowInvariantError: The residual cut does not match the flow value.
    """
    config = config or FlowConfig()
    for capacity in network.capacities:
        _check_width(capacity, config)

    residual = list(network.capacities)
    value = 0
    while True:
        level = _levels(network, residual)
        if level[network.sink] < 0:
            break
        value += _blocking_flow(network, residual, level)
        _check_width(value, config)

    sink_side = _reaches_sink(network, residual)
    source_side = frozenset(v for v in range(network.node_count) if v not in sink_side)
    flows = tuple(
        network.capacities[2 * arc] - residual[2 * arc] for arc in range(network.arc_count)
    )
    capacity = cut_capacity(network, source_side)
    if capacity != value:
        raise FlowInvariantError(capacity, value)
    return CutResult(max_flow_value=value, source_side=source_side, cut_capacity=capacity, arc_flows=flows)


__all__ = ["CutResult", "FlowNetwork", "cut_capacity", "max_flow"]
