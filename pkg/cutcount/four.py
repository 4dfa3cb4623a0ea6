# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Optional

import numpy as np

from .graph import DegreeOrientedDag, Graph
from .patterns.catalog import build_catalog
from .triads import PatternCounts, TriangleStore
from .utils import choose, exact, exact_total

logger = logging.getLogger("cutcount")


@dataclass
class FourCycles:
    total: int
    per_vertex: np.ndarray
    per_edge: np.ndarray


@dataclass
class FourCliques:
    total: int
    per_vertex: np.ndarray
    per_edge: np.ndarray
    per_triangle: Optional[np.ndarray]


@dataclass
class FourAux:
    """Everything the 5-vertex formulas need from the 4-vertex stage.

    ``k4_triangle`` is ``None`` when the triangle lists were not materialized.
    """

    c4_vertex: np.ndarray
    c4_edge: np.ndarray
    k4_vertex: np.ndarray
    k4_edge: np.ndarray
    k4_triangle: Optional[np.ndarray]
    four_cycles: int
    four_cliques: int
    diamonds: int
    tailed_triangles: int


def count_four_simple(g: Graph, tri: TriangleStore) -> Dict[str, int]:
    """Closed-form counts of the 3-star, 3-path, tailed triangle and diamond."""
    d = exact(g.degrees)
    return {
        "three_star": exact_total(choose(g.degrees, 3)),
        "three_path": exact_total((d[g.edge_u] - 1) * (d[g.edge_v] - 1)) - 3 * tri.total,
        "tailed_triangle": exact_total(exact(tri.vertex_triangles) * (d - 2)),
        "diamond": exact_total(choose(tri.edge_triangles, 2)),
    }


def lower_neighbours(dag, c, bound):
    """Neighbours of ``c`` ranked below ``bound``; in-neighbours all qualify."""
    yield from dag.in_adj[c]
    rank = dag.rank_list
    for j in dag.out_adj[c]:
        if rank[j] >= bound:
            break
        yield j


def count_four_cycles(dag: DegreeOrientedDag) -> FourCycles:
    """Count 4-cycles from their degree-order largest vertex ``h``.

    For every ``j`` below ``h`` the scratch entry ``w[j]`` collects the
    wedges ``h - c - j`` with ``c`` below ``h``; each pair of them closes one
    4-cycle. A second walk over the same wedges credits ``w[j] - 1`` cycles
    to each of its two edges.
    """
    g = dag.graph
    rank = dag.rank_list
    scratch = [0] * g.n
    per_edge = np.zeros(g.m, dtype=np.int64)
    total = 0
    edge_id = g.edge_id
    for h in range(g.n):
        bound = rank[h]
        touched = []
        for c in dag.in_adj[h]:
            for j in lower_neighbours(dag, c, bound):
                if not scratch[j]:
                    touched.append(j)
                scratch[j] += 1
        closing = 0
        for j in touched:
            w = scratch[j]
            closing += w * (w - 1) // 2
        total += closing
        if closing:
            for c in dag.in_adj[h]:
                e_hc = edge_id(h, c)
                for j in lower_neighbours(dag, c, bound):
                    extra = scratch[j] - 1
                    if extra:
                        per_edge[e_hc] += extra
                        per_edge[edge_id(c, j)] += extra
        for j in touched:
            scratch[j] = 0

    per_vertex = np.zeros(g.n, dtype=np.int64)
    np.add.at(per_vertex, g.edge_u, per_edge)
    np.add.at(per_vertex, g.edge_v, per_edge)
    per_vertex //= 2
    logger.debug(f"Counted {total} 4-cycles")
    return FourCycles(total, per_vertex, per_edge)


def count_four_cliques(g: Graph, dag: DegreeOrientedDag, tri: TriangleStore) -> FourCliques:
    """Enumerate every 4-clique once from its two degree-order smallest vertices.

    For each directed edge ``i -> j`` the common out-neighbours of ``i`` and
    ``j`` are the tips of directed diamonds; each adjacent pair of tips
    closes a clique. Per-triangle tallies need the triangle lists and are
    ``None`` without them.
    """
    out_sets = [set(outs) for outs in dag.out_adj]
    per_vertex = np.zeros(g.n, dtype=np.int64)
    per_edge = np.zeros(g.m, dtype=np.int64)
    per_triangle = np.zeros(tri.total, dtype=np.int64) if tri.has_lists else None
    rank = dag.rank_list
    edge_id = g.edge_id
    total = 0
    for i, j in dag.edges():
        tips = sorted(out_sets[i] & out_sets[j], key=rank.__getitem__)
        for a, b in combinations(tips, 2):
            e_ab = edge_id(a, b)
            if e_ab is None:
                continue
            total += 1
            for v in (i, j, a, b):
                per_vertex[v] += 1
            for e in (edge_id(i, j), edge_id(i, a), edge_id(i, b), edge_id(j, a), edge_id(j, b), e_ab):
                per_edge[e] += 1
            if per_triangle is not None:
                for t in ((i, j, a), (i, j, b), (i, a, b), (j, a, b)):
                    per_triangle[tri.triangle_id(*t)] += 1
    logger.debug(f"Counted {total} 4-cliques")
    return FourCliques(total, per_vertex, per_edge, per_triangle)


def build_four_aux(simple: Dict[str, int], cycles: FourCycles, cliques: FourCliques) -> FourAux:
    return FourAux(
        c4_vertex=cycles.per_vertex,
        c4_edge=cycles.per_edge,
        k4_vertex=cliques.per_vertex,
        k4_edge=cliques.per_edge,
        k4_triangle=cliques.per_triangle,
        four_cycles=cycles.total,
        four_cliques=cliques.total,
        diamonds=simple["diamond"],
        tailed_triangles=simple["tailed_triangle"],
    )


def four_report(simple: Dict[str, int], aux: FourAux) -> PatternCounts:
    """Assemble the connected 4-vertex counts in catalog order and convert them to induced counts.

    Raises
    ------
    IntegrityError
        When an induced count is negative.
    """
    noninduced = {
        "4-1": simple["three_star"],
        "4-2": simple["three_path"],
        "4-3": simple["tailed_triangle"],
        "4-4": aux.four_cycles,
        "4-5": simple["diamond"],
        "4-6": aux.four_cliques,
    }
    catalog = build_catalog()
    ids = [p.pid for p in catalog.connected(4)]
    induced = catalog.noninduced_to_induced([noninduced[pid] for pid in ids], 4)
    return PatternCounts(4, noninduced, dict(zip(ids, induced)))


def count_four(g: Graph, dag: DegreeOrientedDag, tri: TriangleStore):
    """Run the whole 4-vertex stage; returns the counts and the auxiliaries."""
    simple = count_four_simple(g, tri)
    aux = build_four_aux(simple, count_four_cycles(dag), count_four_cliques(g, dag, tri))
    return four_report(simple, aux), aux
