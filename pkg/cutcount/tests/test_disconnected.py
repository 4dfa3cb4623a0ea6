# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
from math import comb

import networkx as nx
import pytest
import sympy as sp
from hypothesis import given, settings

from ..core import SubgraphCounter
from ..errors import IntegrityError
from ..graph import Graph
from ..oracle import brute_force_induced
from ..patterns.catalog import build_catalog
from ..patterns.disconnected import count_symbol, disconnected_counts, disconnected_polynomials
from .graphs import random_graph, small_graphs, to_graph

n, m, W, T = (count_symbol(pid) for pid in ("1-1", "2-1", "3-1", "3-2"))


def _same(a, b):
    return sp.expand(a - b) == 0


def test_edge_and_vertex_polynomial():
    polynomial = disconnected_polynomials(3)["3-3"]
    assert _same(polynomial, n * m - 2 * m)
    assert polynomial.free_symbols == {n, m}
    assert "N[1-1]*N[2-1]" in str(polynomial)


def test_triangle_and_vertex_polynomial():
    assert _same(disconnected_polynomials(4)["4-11"], n * T - 3 * T)


def test_two_edges_polynomial():
    # pairs of edges minus pairs sharing a vertex
    polynomial = disconnected_polynomials(4)["4-9"]
    assert _same(polynomial, sp.Rational(1, 2) * m**2 - sp.Rational(1, 2) * m - W)
    # a path on four vertices has exactly one pair of disjoint edges
    assert polynomial.subs({m: 3, W: 2}) == 1


def test_polynomials_use_only_connected_counts():
    catalog = build_catalog()
    connected = {n} | {count_symbol(p.pid) for size in range(2, 5) for p in catalog.connected(size)}
    for polynomial in disconnected_polynomials(5).values():
        assert polynomial.free_symbols <= connected


@pytest.mark.parametrize("size, count", [(2, 1), (3, 2), (4, 5), (5, 13)])
def test_every_disconnected_pattern_has_a_polynomial(size, count):
    assert len(disconnected_polynomials(size)) == count


def test_triangle_and_two_isolated_vertices():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2)], num_vertices=5)
    report = SubgraphCounter().count(g, size=5)
    induced = report.induced(5)
    assert induced["5-26"] == 1
    assert sum(induced.values()) == 1
    assert report.induced(4)["4-11"] == 2
    assert report.induced(4)["4-8"] == 3
    assert report.induced(3)["3-2"] == 1
    assert report.induced(3)["3-4"] == 3
    assert report.induced(3)["3-3"] == 6


def test_five_clique_has_no_disconnected_subsets():
    report = SubgraphCounter().count(to_graph(nx.complete_graph(5)), size=5)
    for size in (3, 4, 5):
        assert all(report.induced(size)[p] == 0 for p in report.induced(size) if p not in report.noninduced(size))


def test_empty_graph_is_all_independent():
    report = SubgraphCounter().count(Graph.from_edges([], num_vertices=6), size=5)
    assert report.induced(3)["3-4"] == comb(6, 3)
    assert report.induced(4)["4-7"] == comb(6, 4)
    assert report.induced(5)["5-22"] == comb(6, 5)


def test_inconsistent_connected_counts():
    # one triangle but no edges
    with pytest.raises(IntegrityError):
        disconnected_counts({"2-1": 0, "3-2": 1}, 3, 3)


def test_size_range():
    with pytest.raises(ValueError):
        disconnected_counts({}, 6, 6)


@pytest.mark.parametrize("size", [3, 4, 5])
def test_random_graph_agrees_with_brute_force(size):
    g = random_graph(11, 0.3, seed=size)
    report = SubgraphCounter().count(g, size=size)
    oracle = brute_force_induced(g, size)
    assert report.induced(size) == oracle.induced


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=8))
def test_small_graphs_agree_with_brute_force(g):
    report = SubgraphCounter().count(g, size=5)
    for size in (3, 4, 5):
        assert report.induced(size) == brute_force_induced(g, size).induced
