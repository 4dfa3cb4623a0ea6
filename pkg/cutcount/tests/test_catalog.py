# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import networkx as nx
import numpy as np
import pytest

from ..errors import IntegrityError
from ..patterns.catalog import build_catalog, induced_to_noninduced, noninduced_to_induced
from ..patterns.matrices import FIVE_VERTEX_INVERSE, FIVE_VERTEX_OCCURRENCES
from ..patterns.pattern import edge_mask

FIVE_CLIQUE_COLUMN = [5, 60, 60, 30, 60, 60, 60, 12, 15, 60, 60, 60, 10, 10, 20, 60, 30, 15, 30, 10, 1]


@pytest.fixture(scope="module")
def catalog():
    return build_catalog()


@pytest.mark.parametrize("size, connected, disconnected", [(3, 2, 2), (4, 6, 5), (5, 21, 13)])
def test_atlas_sizes(catalog, size, connected, disconnected):
    assert len(catalog.connected(size)) == connected
    assert len(catalog.disconnected(size)) == disconnected


@pytest.mark.parametrize(
    "pid, automorphisms",
    [("3-2", 6), ("4-4", 8), ("4-6", 24), ("5-1", 24), ("5-8", 10), ("5-18", 8), ("5-21", 120), ("5-22", 120)],
)
def test_automorphisms(catalog, pid, automorphisms):
    assert catalog[pid].automorphisms == automorphisms


def test_anchor_patterns(catalog):
    assert catalog["5-8"].name == "five_cycle"
    assert catalog["5-18"].name == "wheel"
    assert catalog["5-21"].name == "five_clique"
    assert catalog.by_name("three_page_book").pid == "5-14"
    assert nx.is_isomorphic(nx.Graph(list(catalog["5-13"].edges)), nx.complete_bipartite_graph(2, 3))


def test_atlas_covers_every_five_vertex_graph(catalog):
    seen = set()
    for graph in nx.graph_atlas_g():
        if graph.number_of_nodes() != 5:
            continue
        pid = catalog.classify(5, edge_mask(5, graph.edges()))
        seen.add(pid)
        pattern = catalog[pid]
        assert pattern.connected == nx.is_connected(graph)
        assert pattern.edge_count == graph.number_of_edges()
    assert len(seen) == 34


def test_recomputed_matrix_matches_published(catalog):
    assert np.array_equal(catalog.occurrence_matrix(5, connected_only=True), np.array(FIVE_VERTEX_OCCURRENCES))
    assert np.array_equal(catalog.inverse_matrix(5, connected_only=True), np.array(FIVE_VERTEX_INVERSE))


def test_published_row_of_five_cycle(catalog):
    row = catalog.occurrence_matrix(5)[7]
    nonzero = {j + 1: int(v) for j, v in enumerate(row[:21]) if v}
    assert nonzero == {8: 1, 12: 1, 16: 1, 17: 2, 18: 4, 19: 2, 20: 6, 21: 12}


def test_occurrences_are_upper_triangular(catalog):
    for size in (3, 4, 5):
        occ = catalog.occurrence_matrix(size, connected_only=True)
        assert np.array_equal(np.tril(occ.astype(np.int64), -1), np.zeros(occ.shape, dtype=np.int64))
        assert all(occ[i, i] == 1 for i in range(len(occ)))


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_exact_inverse(catalog, size):
    product = catalog.occurrence_matrix(size).dot(catalog.inverse_matrix(size))
    assert np.array_equal(product, np.identity(len(catalog.patterns(size)), dtype=int))


def test_four_stars_inside_five_clique(catalog):
    assert catalog.occurrence_matrix(5)[0, 20] == 5


def test_five_clique_column_converts_to_unit_vector():
    induced = noninduced_to_induced(FIVE_CLIQUE_COLUMN)
    assert induced == [0] * 20 + [1]
    assert induced_to_noninduced(induced) == FIVE_CLIQUE_COLUMN


def test_zero_vector():
    assert noninduced_to_induced([0] * 21) == [0] * 21
    assert noninduced_to_induced([0] * 6) == [0] * 6


def test_inconsistent_counts_raise():
    with pytest.raises(IntegrityError) as error:
        noninduced_to_induced([0] * 20 + [1])
    assert error.value.pattern_id == "5-4"


def test_wrong_length():
    with pytest.raises(ValueError):
        noninduced_to_induced([1, 2, 3, 4, 5], size=5)


def test_catalog_document(catalog):
    document = catalog.to_dict()
    assert sorted(document["sizes"]) == ["1", "2", "3", "4", "5"]
    five = {entry["id"]: entry for entry in document["sizes"]["5"]}
    assert five["5-21"]["automorphisms"] == 120
    assert five["5-1"]["occurrences"][20] == 5
    assert "noninduced_polynomial" in five["5-34"]
    assert "noninduced_polynomial" not in five["5-21"]
