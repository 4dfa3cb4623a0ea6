# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
"""Graph builders and pipeline shortcuts shared by the tests."""
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from ..five import count_five
from ..four import count_four
from ..graph import Graph, build_degree_ordered_dag
from ..triads import count_wedges, enumerate_triangles


def to_graph(nx_graph, name=None) -> Graph:
    nx_graph = nx.convert_node_labels_to_integers(nx_graph)
    return Graph.from_edges(nx_graph.edges(), num_vertices=nx_graph.number_of_nodes(), name=name)


def random_graph(n, p, seed) -> Graph:
    return to_graph(nx.gnp_random_graph(n, p, seed=seed), name=f"gnp-{n}-{p}-{seed}")


def relabelled(g: Graph, perm) -> Graph:
    return Graph.from_edges(((perm[u], perm[v]) for u, v in g.edges()), num_vertices=g.n)


def stages(g: Graph, memory_budget=None):
    """Run every counting stage and return the intermediate objects."""
    dag = build_degree_ordered_dag(g)
    wedges = count_wedges(g, dag)
    tri = enumerate_triangles(g, dag, memory_budget=memory_budget)
    four, aux = count_four(g, dag, tri)
    return dag, wedges, tri, four, aux


def five_counts(g: Graph, workers=1):
    dag, _, tri, _, aux = stages(g)
    return count_five(g, dag, tri, aux, workers=workers)


@st.composite
def small_graphs(draw, max_vertices=9):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(edges, num_vertices=n)
