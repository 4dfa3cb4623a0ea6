# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
"""Non-induced counts of the 21 connected 5-vertex patterns.

Every pattern except the 5-cycle and the 5-clique splits along a small cut
(a vertex, an edge, a triangle or a wedge) into fragments whose counts are
already known per vertex, edge or triangle. The formula for a cut multiplies
the fragment counts and subtracts the configurations where fragments
overlap. The 5-cycle is counted through directed 3-paths and the 5-clique
through directed bipyramids, both over the degree-ordered DAG.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict

import numpy as np

from .four import FourAux, lower_neighbours
from .graph import DegreeOrientedDag, Graph
from .parallel import sum_over_ranges
from .patterns.catalog import build_catalog
from .triads import PatternCounts, TriangleStore
from .utils import choose, exact, exact_total

logger = logging.getLogger("cutcount")


@dataclass
class FiveCounts(PatternCounts):
    """5-vertex counts plus the directed enumeration statistics of the run.

    ``stats`` holds ``directed_three_paths`` (the 3-paths walked by the
    5-cycle counter) and ``bipyramid_candidates`` (the vertex pairs tested by
    the 5-clique counter).
    """

    stats: Dict[str, int] = field(default_factory=dict)


def _ordered(u, v, f):
    """``f(i, j)`` summed over both orientations of every edge."""
    return exact_total(f(u, v)) + exact_total(f(v, u))


def count_vertex_cut(g: Graph, tri: TriangleStore, aux: FourAux) -> Dict[str, int]:
    """Patterns with a cut vertex whose removal leaves only edges and known fragments:
    the 4-star, 4-path, cricket, banner, bowtie and tailed 4-clique."""
    d = exact(g.degrees)
    x = g.degrees - 1
    s1 = np.zeros(g.n, dtype=np.int64)
    s2 = np.zeros(g.n, dtype=np.int64)
    np.add.at(s1, g.edge_u, x[g.edge_v])
    np.add.at(s1, g.edge_v, x[g.edge_u])
    np.add.at(s2, g.edge_u, x[g.edge_v] ** 2)
    np.add.at(s2, g.edge_v, x[g.edge_u] ** 2)
    s1, s2 = exact(s1), exact(s2)
    tv = exact(tri.vertex_triangles)
    diamonds = aux.diamonds

    return {
        "5-1": exact_total(choose(g.degrees, 4)),
        "5-3": exact_total((s1 * s1 - s2) // 2)
        - 4 * aux.four_cycles
        - 2 * aux.tailed_triangles
        - 3 * tri.total,
        "5-4": exact_total(tv * choose(g.degrees - 2, 2)),
        "5-7": exact_total(exact(aux.c4_vertex) * (d - 2)) - 2 * diamonds,
        "5-9": exact_total(choose(tri.vertex_triangles, 2)) - 2 * diamonds,
        "5-15": exact_total(exact(aux.k4_vertex) * (d - 3)),
    }


def count_edge_cut(g: Graph, tri: TriangleStore, aux: FourAux) -> Dict[str, int]:
    """Patterns with a cut edge: the fork, long-tailed triangle, bull, the two
    tailed diamonds, the house, the 3-page book and the eared 4-clique."""
    d = exact(g.degrees)
    tv = exact(tri.vertex_triangles)
    te = exact(tri.edge_triangles)
    u, v = g.edge_u, g.edge_v
    diamonds = aux.diamonds

    def fork(i, j):
        return (d[j] - 1) * choose(g.degrees[i] - 1, 2)

    def long_tail(i, j):
        return (d[j] - 1) * (tv[i] - te)

    def chord_tail(i, j):
        return choose(tri.edge_triangles, 2) * (d[i] - 3)

    return {
        "5-2": _ordered(u, v, fork) - 2 * aux.tailed_triangles,
        "5-5": _ordered(u, v, long_tail) - 4 * diamonds,
        "5-6": exact_total(te * (d[u] - 2) * (d[v] - 2)) - 2 * diamonds,
        "5-11": _ordered(u, v, chord_tail),
        "5-12": exact_total(exact(aux.c4_edge) * te) - 4 * diamonds,
        "5-14": exact_total(choose(tri.edge_triangles, 3)),
        "5-19": exact_total(exact(aux.k4_edge) * (te - 2)),
    }


def count_triangle_cut(g: Graph, tri: TriangleStore, aux: FourAux) -> Dict[str, int]:
    """Patterns cut by a triangle: tip-tailed diamond, gem and almost 5-clique."""
    tri.require_lists("counting triangle-cut patterns")
    d = exact(g.degrees)
    opposite = exact(tri.edge_triangles[tri.triangle_edges]) - 1
    corner_degrees = d[tri.triangles] - 2
    # the two edges at corner c are the ones opposite the other two corners
    at_corner = opposite[:, [1, 0, 0]] * opposite[:, [2, 2, 1]]
    four_cliques = aux.four_cliques
    return {
        "5-10": exact_total(opposite * corner_degrees) - 12 * four_cliques,
        "5-16": exact_total(at_corner) - 12 * four_cliques,
        "5-20": exact_total(choose(aux.k4_triangle, 2)),
    }


def _wedge_cut_kernel(payload, start, stop):
    g, dag, tri = payload
    rank = dag.rank_list
    adj = g.adjacency
    edge_id = g.edge_id
    completions = tri.completions
    common = [0] * g.n
    diamond_walks = [0] * g.n
    hub_wedges = [0] * g.n
    n13 = n17 = wheels = 0
    for i in range(start, stop):
        bound = rank[i]
        touched = []
        for c in adj[i]:
            for j in adj[c]:
                if rank[j] > bound:
                    if not common[j]:
                        touched.append(j)
                    common[j] += 1
        for k in adj[i]:
            for ell in completions(edge_id(i, k)):
                for j in completions(edge_id(k, ell)):
                    if j != i and rank[j] > bound:
                        diamond_walks[j] += 1
        for j in touched:
            w = common[j]
            n13 += w * (w - 1) * (w - 2) // 6
            n17 += (w - 2) * (diamond_walks[j] // 2)
            common[j] = 0
            diamond_walks[j] = 0

        # i as the hub of a wheel; a and c opposite on the rim
        for a in adj[i]:
            rim = []
            for b in completions(edge_id(i, a)):
                for c in completions(edge_id(i, b)):
                    if c != a:
                        if not hub_wedges[c]:
                            rim.append(c)
                        hub_wedges[c] += 1
            for c in rim:
                x = hub_wedges[c]
                wheels += x * (x - 1) // 2
                hub_wedges[c] = 0
    return n13, n17, wheels


def count_wedge_cut(g: Graph, dag: DegreeOrientedDag, tri: TriangleStore, workers: int = 1) -> Dict[str, int]:
    """Patterns cut by a pair of non-adjacent vertices: ``K_{2,3}``, ``K_{2,3}``
    plus an edge, and the wheel.

    For each vertex ``i`` a 2-step walk counts the common neighbours
    ``W(i, j)`` of every later ``j``, and a triangle-to-triangle walk counts
    the diamonds with ``i`` and ``j`` at the ends of the missing chord. The
    wheel is counted from its hub: two opposite rim vertices with two common
    neighbours inside the hub's neighbourhood.
    """
    tri.require_lists("counting wedge-cut patterns")
    n13, n17, wheels = sum_over_ranges(_wedge_cut_kernel, (g, dag, tri), g.n, workers)
    return {"5-13": n13, "5-17": n17, "5-18": wheels // 4}


def _five_cycle_kernel(payload, start, stop):
    g, dag = payload
    rank = dag.rank_list
    adj = g.adjacency
    has_edge = g.has_edge
    scratch = [0] * g.n
    cycles = paths = 0
    for h in range(start, stop):
        lower = dag.in_adj[h]
        if len(lower) < 2:
            continue
        bound = rank[h]
        touched = []
        for a in lower:
            for x in lower_neighbours(dag, a, bound):
                if not scratch[x]:
                    touched.append(x)
                scratch[x] += 1
        # h <- b - y -> x, all of b, y, x below h
        for b in lower:
            for y in adj[b]:
                if rank[y] >= bound:
                    continue
                y_closes = has_edge(y, h)
                for x in dag.out_adj[y]:
                    if rank[x] >= bound:
                        break
                    if x == b:
                        continue
                    paths += 1
                    w = scratch[x]
                    if w:
                        cycles += w - has_edge(x, b) - y_closes
        for x in touched:
            scratch[x] = 0
    return cycles, paths


def count_five_cycles(g: Graph, dag: DegreeOrientedDag, workers: int = 1):
    """Count 5-cycles from their degree-order largest vertex ``h``.

    Each directed 3-path ``b - y -> x`` below ``h`` with ``b`` adjacent to
    ``h`` extends to a cycle through every other in-neighbour of ``h``
    adjacent to ``x``. The in-neighbours counted by ``w(h, x)`` that are ``b``
    or ``y`` themselves form tailed triangles, not cycles, and are removed.

    Returns
    -------
    tuple of int
        The 5-cycle count and the number of directed 3-paths walked.
    """
    return sum_over_ranges(_five_cycle_kernel, (g, dag), g.n, workers)


def _five_clique_kernel(payload, start, stop):
    g, dag, tri = payload
    rank = dag.rank_list
    has_edge = g.has_edge
    cliques = candidates = 0
    rows = tri.triangles[start:stop].tolist()
    opposite = tri.triangle_edges[start:stop, 0].tolist()
    for (i, j, k), e_jk in zip(rows, opposite):
        bound = rank[k]
        tips = [ell for ell in tri.completions(e_jk) if rank[ell] > bound and has_edge(ell, i)]
        candidates += len(tips) * (len(tips) - 1) // 2
        for a, b in combinations(tips, 2):
            if has_edge(a, b):
                cliques += 1
    return cliques, candidates


def count_five_cliques(g: Graph, dag: DegreeOrientedDag, tri: TriangleStore, workers: int = 1):
    """Count 5-cliques from their three degree-order smallest vertices.

    For triangle ``i < j < k`` the later vertices closing a triangle on
    ``(j, k)`` and adjacent to ``i`` extend it to a 4-clique; each adjacent
    pair of them closes a 5-clique.

    Returns
    -------
    tuple of int
        The 5-clique count and the number of candidate pairs tested.
    """
    tri.require_lists("counting 5-cliques")
    return sum_over_ranges(_five_clique_kernel, (g, dag, tri), tri.total, workers)


def five_report(noninduced: Dict[str, int], stats=None) -> FiveCounts:
    """Order the 21 non-induced counts by catalog id and convert them to induced counts.

    Raises
    ------
    IntegrityError
        Naming the first pattern whose induced count is negative.
    """
    catalog = build_catalog()
    ids = [p.pid for p in catalog.connected(5)]
    missing = [pid for pid in ids if pid not in noninduced]
    if missing:
        raise ValueError(f"missing non-induced counts for {', '.join(missing)}")
    ordered = {pid: int(noninduced[pid]) for pid in ids}
    induced = catalog.noninduced_to_induced(list(ordered.values()), 5)
    return FiveCounts(5, ordered, dict(zip(ids, induced)), stats=dict(stats or {}))


def count_five(
    g: Graph,
    dag: DegreeOrientedDag,
    tri: TriangleStore,
    aux: FourAux,
    workers: int = 1,
) -> FiveCounts:
    """Run every 5-vertex counter and assemble the report."""
    if g.n < 5:
        ids = [p.pid for p in build_catalog().connected(5)]
        zeros = dict.fromkeys(ids, 0)
        return FiveCounts(5, zeros, dict(zeros), stats={"directed_three_paths": 0, "bipyramid_candidates": 0})
    tri.require_lists("5-vertex counting")

    noninduced = {}
    noninduced.update(count_vertex_cut(g, tri, aux))
    noninduced.update(count_edge_cut(g, tri, aux))
    noninduced.update(count_triangle_cut(g, tri, aux))
    noninduced.update(count_wedge_cut(g, dag, tri, workers))
    noninduced["5-8"], paths = count_five_cycles(g, dag, workers)
    noninduced["5-21"], candidates = count_five_cliques(g, dag, tri, workers)
    logger.debug(f"5-cycles {noninduced['5-8']}, 5-cliques {noninduced['5-21']}")
    return five_report(
        noninduced,
        stats={"directed_three_paths": paths, "bipyramid_candidates": candidates},
    )
