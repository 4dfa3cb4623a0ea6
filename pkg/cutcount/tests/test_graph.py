# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import io

import fsspec
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from ..errors import GraphFormatError
from ..graph import Graph, build_degree_ordered_dag, load_edge_list, read_edge_list
from .graphs import small_graphs, to_graph


def test_load_drops_loops_and_duplicates():
    g = load_edge_list(io.StringIO("1 2\n2 1\n1 1\n2 3\n"))
    assert (g.n, g.m, g.dropped) == (3, 2, 2)
    assert g.labels == (1, 2, 3)
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_load_triangle():
    g = load_edge_list(["0 1", "1 2", "0 2"])
    assert g.m == 3
    assert g.degrees.tolist() == [2, 2, 2]
    assert int(g.degrees.sum()) == 2 * g.m


def test_load_compacts_sparse_ids_in_first_appearance_order():
    g = load_edge_list(["# comment", "", "% another", "900 7", "7 42"])
    assert g.labels == (900, 7, 42)
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)


def test_empty_input_is_empty_graph():
    g = load_edge_list([])
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize(
    "line, lineno",
    [("1 x", 2), ("1 2 3", 2), ("7", 2)],
)
def test_malformed_line(line, lineno):
    with pytest.raises(GraphFormatError) as error:
        load_edge_list(["0 1", line])
    assert error.value.lineno == lineno
    assert str(error.value).startswith(f"line {lineno}:")


def test_num_vertices_pads_isolated_vertices():
    g = load_edge_list(["5 6"], num_vertices=4)
    assert g.n == 4
    assert g.labels == (5, 6, None, None)
    assert g.degrees.tolist() == [1, 1, 0, 0]


def test_num_vertices_below_distinct_ids():
    with pytest.raises(GraphFormatError):
        load_edge_list(["0 1", "1 2"], num_vertices=2)


def test_header_only_when_requested():
    lines = ["5 2", "0 1", "1 2"]
    with_header = load_edge_list(lines, header=True)
    assert (with_header.n, with_header.m) == (5, 2)
    without_header = load_edge_list(lines)
    assert (without_header.n, without_header.m) == (5, 3)


def test_read_edge_list_through_fsspec():
    with fsspec.open("memory://cutcount/edges.txt", "wt") as f:
        f.write("0 1\n1 2\n2 0\n")
    with fsspec.open("memory://cutcount/edges.txt.gz", "wt", compression="gzip") as f:
        f.write("0 1\n1 2\n2 0\n")
    plain = read_edge_list("memory://cutcount/edges.txt")
    packed = read_edge_list("memory://cutcount/edges.txt.gz")
    assert plain.name == "memory://cutcount/edges.txt"
    assert plain.m == packed.m == 3


def test_loading_is_deterministic():
    lines = ["4 9", "9 1", "1 4", "4 2", "2 9"]
    assert load_edge_list(lines) == load_edge_list(lines)


def test_edge_ids():
    g = to_graph(nx.complete_graph(4))
    assert [g.edge_id(u, v) for u, v in g.edges()] == list(range(6))
    assert g.edge_id(3, 0) == g.edge_id(0, 3)
    assert g.edge_id(1, 1) is None


def test_dag_path_points_at_centre():
    dag = build_degree_ordered_dag(to_graph(nx.path_graph(3)))
    assert sorted(dag.edges()) == [(0, 1), (2, 1)]


def test_dag_triangle_breaks_ties_by_id():
    dag = build_degree_ordered_dag(to_graph(nx.complete_graph(3)))
    assert sorted(dag.edges()) == [(0, 1), (0, 2), (1, 2)]


def test_dag_k4_out_degrees():
    dag = build_degree_ordered_dag(to_graph(nx.complete_graph(4)))
    assert dag.out_degree.tolist() == [3, 2, 1, 0]


def test_dag_out_lists_sorted_by_rank():
    g = to_graph(nx.gnp_random_graph(30, 0.3, seed=5))
    dag = build_degree_ordered_dag(g)
    for outs in dag.out_adj:
        assert [dag.rank_list[v] for v in outs] == sorted(dag.rank_list[v] for v in outs)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_vertices=12))
def test_dag_orientation_properties(g):
    dag = build_degree_ordered_dag(g)
    for u, v in dag.edges():
        assert g.degree(u) < g.degree(v) or (g.degree(u) == g.degree(v) and u < v)
        assert dag.precedes(u, v)
    assert np.array_equal(dag.out_degree + dag.in_degree, g.degrees)
    assert {tuple(sorted(e)) for e in dag.edges()} == set(g.edges())


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_vertices=12))
def test_graph_invariants(g):
    for v in range(g.n):
        row = g.neighbors(v)
        assert row == sorted(set(row))
        assert v not in row
        for u in row:
            assert v in g.neighbors(u)
    assert int(g.degrees.sum()) == 2 * g.m
    assert Graph.from_edges(g.edges(), num_vertices=g.n) == g
