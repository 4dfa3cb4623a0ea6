# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from ..core import SubgraphCounter
from ..errors import BudgetExceededError, IntegrityError
from ..five import count_five, five_report
from ..oracle import brute_force_induced
from .graphs import five_counts, random_graph, relabelled, small_graphs, stages, to_graph

FIVE_CLIQUE_COLUMN = [5, 60, 60, 30, 60, 60, 60, 12, 15, 60, 60, 60, 10, 10, 20, 60, 30, 15, 30, 10, 1]
IDS = [f"5-{i}" for i in range(1, 22)]


def _only(**counts):
    values = dict.fromkeys(IDS, 0)
    values.update({f"5-{k[1:]}": v for k, v in counts.items()})
    return values


def _check_against_oracle(g):
    counts = five_counts(g)
    oracle = brute_force_induced(g, 5, budget=None)
    assert counts.noninduced == {pid: oracle.noninduced[pid] for pid in IDS}
    assert counts.induced == {pid: oracle.induced[pid] for pid in IDS}


def test_five_clique():
    counts = five_counts(to_graph(nx.complete_graph(5)))
    assert counts.noninduced == dict(zip(IDS, FIVE_CLIQUE_COLUMN))
    assert counts.induced == _only(p21=1)


def test_six_clique():
    counts = five_counts(to_graph(nx.complete_graph(6)))
    assert counts.noninduced == {pid: 6 * v for pid, v in zip(IDS, FIVE_CLIQUE_COLUMN)}
    assert counts.induced == _only(p21=6)


def test_five_cycle():
    counts = five_counts(to_graph(nx.cycle_graph(5)))
    assert counts.noninduced == _only(p3=5, p8=1)
    assert counts.induced == _only(p8=1)


def test_four_star():
    counts = five_counts(to_graph(nx.star_graph(4)))
    assert counts.noninduced == _only(p1=1)
    assert counts.induced == _only(p1=1)


def test_complete_bipartite():
    counts = five_counts(to_graph(nx.complete_bipartite_graph(2, 3)))
    assert counts.noninduced["5-13"] == 1
    assert counts.noninduced["5-17"] == 0
    assert counts.noninduced["5-18"] == 0
    assert counts.induced == _only(p13=1)


def test_petersen():
    counts = five_counts(to_graph(nx.petersen_graph()))
    assert counts.noninduced == _only(p2=60, p3=120, p8=12)
    assert counts.induced == _only(p2=60, p3=60, p8=12)


def test_wheel_and_its_hub():
    counts = five_counts(to_graph(nx.wheel_graph(5)))
    assert counts.noninduced["5-18"] == 1
    assert counts.induced == _only(p18=1)


def test_fewer_than_five_vertices():
    counts = five_counts(to_graph(nx.complete_graph(4)))
    assert counts.noninduced == _only()
    assert counts.stats == {"directed_three_paths": 0, "bipyramid_candidates": 0}


def test_triangle_free_graph_has_no_triangle_patterns():
    g = to_graph(nx.bipartite.random_graph(8, 9, 0.4, seed=6))
    counts = five_counts(g)
    with_triangles = ["5-4", "5-5", "5-6", "5-9", "5-10", "5-11", "5-12", "5-14", "5-15", "5-16"]
    with_triangles += ["5-17", "5-18", "5-19", "5-20", "5-21"]
    assert all(counts.noninduced[pid] == 0 for pid in with_triangles)
    assert counts.noninduced["5-8"] == 0
    _check_against_oracle(g)


@pytest.mark.parametrize("n, p, seed", [(6, 0.6, 1), (8, 0.5, 2), (10, 0.4, 3), (12, 0.35, 4), (12, 0.7, 5)])
def test_random_graphs_agree_with_brute_force(n, p, seed):
    _check_against_oracle(random_graph(n, p, seed))


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_vertices=8))
def test_small_graphs_agree_with_brute_force(g):
    _check_against_oracle(g)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_many_graphs_agree_with_brute_force(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(6, 26))
    p = float(rng.choice([0.1, 0.2, 0.3, 0.5]))
    graph = nx.gnp_random_graph(n, p, seed=seed)
    if seed % 3 == 1:
        graph.add_edges_from(combinations(rng.choice(n, size=min(n, 6), replace=False).tolist(), 2))
    elif seed % 3 == 2:
        hub = int(rng.integers(n))
        graph.add_edges_from((hub, v) for v in range(n) if v != hub)
    report = SubgraphCounter().count(to_graph(graph), oracle_check=True)
    assert report.oracle_check == "PASS"


def test_counts_do_not_depend_on_vertex_ids():
    g = random_graph(13, 0.45, seed=17)
    expected = five_counts(g).noninduced
    rng = np.random.default_rng(5)
    for _ in range(3):
        assert five_counts(relabelled(g, rng.permutation(g.n).tolist())).noninduced == expected


def test_induced_counts_cover_every_subset():
    g = random_graph(11, 0.5, seed=12)
    report = SubgraphCounter().count(g, size=5)
    assert sum(report.induced(5).values()) == comb(11, 5)
    assert len(report.induced(5)) == 34


def test_workers_do_not_change_counts():
    g = random_graph(16, 0.4, seed=30)
    serial = five_counts(g, workers=1)
    pooled = five_counts(g, workers=2)
    assert pooled.noninduced == serial.noninduced
    assert pooled.stats == serial.stats


def test_counting_only_mode_refuses_five():
    g = to_graph(nx.complete_graph(6))
    dag, _, tri, _, aux = stages(g, memory_budget=0)
    with pytest.raises(BudgetExceededError):
        count_five(g, dag, tri, aux)


def test_inconsistent_counts_are_reported():
    with pytest.raises(IntegrityError) as error:
        five_report(_only(p21=1))
    assert error.value.pattern_id == "5-4"


def test_missing_counts():
    with pytest.raises(ValueError):
        five_report({"5-1": 0})
