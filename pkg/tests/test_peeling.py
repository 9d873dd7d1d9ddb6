# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Peeling approximations: guarantees, bookkeeping and tie rules."""

from __future__ import annotations

from fractions import Fraction
import random

from hypothesis import given, settings, strategies as st
import pytest

from trident import Graph
from trident.cliques import clique_index, edge_index, list_triangles
from trident.config import PeelConfig
from trident.exceptions import ParameterError
from trident.graph import density_report
from trident.oracle import brute_force_densest
from trident.solvers.exact import solve_exact
from trident.solvers.peeling import (
    PeelBuckets,
    as_epsilon,
    batch_peel,
    batch_round_bound,
    greedy_ds,
    grow_from_query,
    peel,
)

from .helpers import complete_graph, disjoint_union, gnp_graph, graphs, graphs_with_subset, seeded_corpus, star


# --- Bucket bookkeeping ---


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=14), st.sampled_from([2, 3, 4]), st.randoms(use_true_random=False))
def test_live_counts_match_a_recount(graph: Graph, k: int, rng: random.Random):
    index = clique_index(graph, k)
    buckets = PeelBuckets(index)
    order = list(range(graph.n))
    rng.shuffle(order)
    for v in order[: graph.n // 2]:
        buckets.remove(v)
        live = frozenset(buckets.live)
        recount = index.counts_within(live)
        assert {u: buckets.counts[u] for u in live} == recount
        assert buckets.live_cliques == index.count_inside(live)
        for u in live:
            assert u in buckets.buckets[buckets.counts[u]]


def test_pop_min_prefers_smallest_id():
    graph = disjoint_union(complete_graph(3), complete_graph(3))
    buckets = PeelBuckets(list_triangles(graph))
    assert buckets.pop_min() == (0, 1)
    # 1 and 2 lost their only triangle
    assert buckets.pop_min() == (1, 0)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=14), st.sampled_from([2, 3, 4]), st.randoms(use_true_random=False))
def test_pop_order_is_count_then_id(graph: Graph, k: int, rng: random.Random):
    index = clique_index(graph, k)
    protected = frozenset(v for v in range(graph.n) if rng.random() < 0.2)
    buckets = PeelBuckets(index, protected)
    while True:
        candidates = [(buckets.counts[u], u) for u in buckets.live if u not in protected]
        popped = buckets.pop_min()
        if not candidates:
            assert popped is None
            break
        count, v = min(candidates)
        assert popped == (v, count)


def test_sparse_graph_pops_in_id_order():
    graph = star(2000)
    buckets = PeelBuckets(list_triangles(graph))
    popped = [buckets.pop_min() for _ in range(graph.n)]
    assert popped == [(v, 0) for v in range(graph.n)]
    assert buckets.pop_min() is None


def test_protected_vertices_never_pop():
    buckets = PeelBuckets(list_triangles(complete_graph(3)), protected=frozenset({0, 1, 2}))
    assert buckets.pop_min() is None


# --- Single-vertex peeling ---


def test_complete_graph_keeps_everything():
    for n in range(3, 8):
        graph = complete_graph(n)
        result, trace = peel(graph, list_triangles(graph))
        assert result.best_set == frozenset(range(n))
        assert trace.best_index == 0


def test_trace_agrees_with_returned_set():
    graph = gnp_graph(25, 0.3, seed=5)
    index = list_triangles(graph)
    result, trace = peel(graph, index)
    assert trace.densities[trace.best_index] == result.density
    assert density_report(graph, result.best_set, index).tau == result.density
    removed = {v for v, _ in trace.removals[: trace.best_index]}
    assert result.best_set == frozenset(range(graph.n)) - removed
    assert len(trace.rows(graph)) == len(trace.removals)


def test_trace_recording_can_be_disabled():
    graph = gnp_graph(12, 0.5, seed=3)
    result, trace = peel(graph, list_triangles(graph), config=PeelConfig(record_trace=False))
    assert trace.removals == []
    assert result.density == peel(graph, list_triangles(graph))[0].density


@pytest.mark.parametrize("k", [2, 3, 4])
def test_peel_is_a_1_over_k_approximation(k: int):
    for graph in seeded_corpus(200):
        index = clique_index(graph, k)
        optimum = brute_force_densest(graph, k).density
        result, _ = peel(graph, index)
        assert k * result.density >= optimum
        assert result.density <= optimum


def test_karate_peel(karate: Graph):
    result, _ = peel(karate, list_triangles(karate))
    assert result.best_set == frozenset({0, 1, 2, 3, 7, 13})
    assert result.report.f_e == Fraction(14, 15)
    assert result.report.f_t == Fraction(4, 5)
    assert result.method == "tds-peel"


@settings(max_examples=60, deadline=None)
@given(graphs_with_subset(min_n=2, max_n=12))
def test_protected_set_is_always_kept(case: tuple[Graph, frozenset[int]]):
    graph, protected = case
    result, _ = peel(graph, list_triangles(graph), protected)
    assert protected <= result.best_set


def test_fully_protected_graph_returns_everything():
    graph = star(4)
    result, trace = peel(graph, list_triangles(graph), range(graph.n))
    assert result.best_set == frozenset(range(graph.n))
    assert result.density == 0
    assert trace.removals == []


# --- Greedy densest subgraph ---


def test_star_keeps_the_whole_star():
    result, _ = greedy_ds(star(5))
    assert result.best_set == frozenset(range(6))
    assert result.density == Fraction(5, 6)
    assert result.method == "ds-peel"


def test_greedy_ds_is_a_half_approximation():
    for graph in seeded_corpus(150):
        optimum = brute_force_densest(graph, 2).density
        result, _ = greedy_ds(graph)
        assert 2 * result.density >= optimum


def test_greedy_ds_on_karate_is_within_half(karate: Graph):
    exact = solve_exact(karate, edge_index(karate))
    greedy, _ = greedy_ds(karate)
    assert exact.density >= greedy.density >= exact.density / 2


# --- Batch peeling ---


@pytest.mark.parametrize("epsilon", [Fraction(1, 10), Fraction(1, 2), 1, 2])
def test_batch_guarantee_and_round_bound(epsilon: Fraction):
    for graph in seeded_corpus(120):
        index = list_triangles(graph)
        optimum = brute_force_densest(graph, 3).density
        result, rounds = batch_peel(graph, index, epsilon)
        assert 3 * (1 + Fraction(epsilon)) * result.density >= optimum
        assert rounds <= batch_round_bound(graph.n, epsilon)


def test_batch_on_g30():
    graph = gnp_graph(30, 0.3, seed=30)
    index = list_triangles(graph)
    optimum = solve_exact(graph, index).density
    result, rounds = batch_peel(graph, index, 0.5)
    assert result.density >= optimum / Fraction(9, 2)
    assert batch_round_bound(30, 0.5) == 10
    assert rounds <= 10


@pytest.mark.parametrize("k", [2, 4])
def test_batch_for_other_clique_orders(k: int):
    for graph in seeded_corpus(60):
        index = clique_index(graph, k)
        optimum = brute_force_densest(graph, k).density
        result, _ = batch_peel(graph, index, Fraction(1, 4))
        assert k * Fraction(5, 4) * result.density >= optimum


def test_triangle_free_batch_ends_in_one_round():
    graph = star(6)
    result, rounds = batch_peel(graph, list_triangles(graph), 1)
    assert rounds == 1
    assert result.best_set == frozenset(range(graph.n))


def test_each_round_removes_a_vertex():
    graph = gnp_graph(40, 0.4, seed=8)
    _, rounds = batch_peel(graph, list_triangles(graph), Fraction(1, 100))
    assert rounds <= graph.n


@pytest.mark.parametrize("epsilon", [0, -1, "0", 0.0])
def test_batch_rejects_non_positive_epsilon(epsilon: object):
    with pytest.raises(ParameterError):
        batch_peel(complete_graph(3), list_triangles(complete_graph(3)), epsilon)  # type: ignore[arg-type]


def test_float_epsilon_is_read_as_decimal():
    assert as_epsilon(0.1) == Fraction(1, 10)


# --- Growing from a query ---


@settings(max_examples=60, deadline=None)
@given(graphs_with_subset(min_n=2, max_n=12))
def test_grow_contains_query_and_reports_exactly(case: tuple[Graph, frozenset[int]]):
    graph, query = case
    if not query:
        return
    index = list_triangles(graph)
    result = grow_from_query(graph, index, query)
    assert query <= result.best_set
    assert density_report(graph, result.best_set, index).tau == result.density
    assert result.density <= brute_force_densest(graph, 3, query).density


def test_grow_finds_the_clique_next_to_the_query():
    graph = disjoint_union(complete_graph(5), star(3))
    result = grow_from_query(graph, list_triangles(graph), {0})
    assert result.best_set == frozenset(range(5))
    assert result.density == 2


def test_grow_needs_a_query():
    with pytest.raises(ParameterError):
        grow_from_query(complete_graph(3), list_triangles(complete_graph(3)), [])
