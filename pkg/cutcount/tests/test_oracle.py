# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
from math import comb

import networkx as nx
import pytest

from ..errors import BudgetExceededError
from ..oracle import brute_force_induced
from .graphs import random_graph, to_graph


def test_four_clique():
    result = brute_force_induced(to_graph(nx.complete_graph(4)), 4)
    assert result.induced["4-6"] == 1
    assert sum(result.induced.values()) == 1
    assert result.connected(result.noninduced) == {"4-1": 4, "4-2": 12, "4-3": 12, "4-4": 3, "4-5": 6, "4-6": 1}


def test_five_cycle_triples():
    result = brute_force_induced(to_graph(nx.cycle_graph(5)), 3)
    assert result.induced == {"3-1": 5, "3-2": 0, "3-3": 5, "3-4": 0}
    assert result.noninduced["3-1"] == 5


def test_every_subset_is_classified():
    result = brute_force_induced(random_graph(12, 0.4, seed=1), 5)
    assert sum(result.induced.values()) == comb(12, 5) == 792
    assert len(result.induced) == 34


def test_edges():
    g = random_graph(9, 0.5, seed=2)
    result = brute_force_induced(g, 2)
    assert result.induced == {"2-1": g.m, "2-2": comb(9, 2) - g.m}


def test_fewer_vertices_than_pattern():
    result = brute_force_induced(to_graph(nx.path_graph(3)), 5)
    assert set(result.induced.values()) == {0}


def test_budget():
    g = random_graph(30, 0.1, seed=3)
    with pytest.raises(BudgetExceededError) as error:
        brute_force_induced(g, 5, budget=1000)
    assert error.value.required == comb(30, 5)
    assert brute_force_induced(g, 2, budget=1000).induced["2-1"] == g.m


@pytest.mark.parametrize("size", [1, 6])
def test_size_range(size):
    with pytest.raises(ValueError):
        brute_force_induced(to_graph(nx.complete_graph(3)), size)


def test_workers_do_not_change_counts():
    g = random_graph(14, 0.5, seed=4)
    assert brute_force_induced(g, 4, workers=3).induced == brute_force_induced(g, 4).induced
