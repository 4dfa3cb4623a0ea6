# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .errors import BudgetExceededError
from .graph import DegreeOrientedDag, Graph
from .patterns.catalog import build_catalog
from .utils import choose, exact_total

logger = logging.getLogger("cutcount")

# triangles and their opposite edge ids (2 x 3 int64), the completion pool
# (3 int64) and one int64 search key
BYTES_PER_TRIANGLE = 80


@dataclass
class PatternCounts:
    """Non-induced and induced counts of the connected patterns of one size,
    keyed by pattern id, plus the disconnected induced counts once derived."""

    size: int
    noninduced: Dict[str, int]
    induced: Dict[str, int]
    disconnected: Dict[str, int] = field(default_factory=dict)

    def all_induced(self) -> Dict[str, int]:
        return {**self.induced, **self.disconnected}


@dataclass(frozen=True)
class WedgeStats:
    """Undirected wedge count and its split by the orientation at the centre."""

    wedges: int
    outout: int
    inout: int
    inin: int

    def ratios(self) -> Dict[str, Optional[float]]:
        if not self.wedges:
            return {"outout": None, "inout": None}
        return {"outout": self.outout / self.wedges, "inout": self.inout / self.wedges}


def count_wedges(g: Graph, dag: DegreeOrientedDag) -> WedgeStats:
    """Count wedges and classify each by the directions of its two edges at the centre.

    Examples
    --------
    On ``K4`` every class holds 4 of the 12 wedges; on a star every edge
    points at the centre, so all wedges are in-in.
    """
    stats = WedgeStats(
        wedges=exact_total(choose(g.degrees, 2)),
        outout=exact_total(choose(dag.out_degree, 2)),
        inout=exact_total(dag.in_degree.astype(object) * dag.out_degree.astype(object)),
        inin=exact_total(choose(dag.in_degree, 2)),
    )
    logger.debug(f"Counted {stats}")
    return stats


class TriangleStore:
    """Triangle counts per vertex and per edge, and optionally the triangles themselves.

    With lists materialized the store also holds

    * ``triangles``: ``(T, 3)`` array, each row ``(u, v, w)`` with ``u < v < w``
      in the degree order, rows grouped by ``u``;
    * ``triangle_edges``: ``(T, 3)`` array, column ``c`` holding the id of the
      edge opposite ``triangles[:, c]``;
    * ``offsets``/``pool``: the completing vertices of edge ``e`` are
      ``pool[offsets[e]:offsets[e + 1]]``, ``3T`` entries in total.

    In counting-only mode these are ``None`` and :meth:`require_lists` raises.
    """

    def __init__(self, n: int, m: int):
        self.total = 0
        self.vertex_triangles = np.zeros(n, dtype=np.int64)
        self.edge_triangles = np.zeros(m, dtype=np.int64)
        self.triangles = None
        self.triangle_edges = None
        self.offsets = None
        self.pool = None
        self._source_offsets = None
        self._keys = None
        self._rank = None

    @property
    def has_lists(self) -> bool:
        return self.pool is not None

    @property
    def required_bytes(self) -> int:
        return BYTES_PER_TRIANGLE * self.total

    def require_lists(self, operation: str, budget: Optional[int] = None):
        if not self.has_lists:
            raise BudgetExceededError(
                f"{operation} needs the triangle lists, which exceed the memory budget",
                required=self.required_bytes,
                budget=budget,
            )

    def completions(self, e: int) -> List[int]:
        """Vertices closing a triangle with edge ``e``."""
        return self.pool[self.offsets[e]:self.offsets[e + 1]].tolist()

    def triangle_id(self, u: int, v: int, w: int) -> int:
        """Row of triangle ``(u, v, w)`` given in degree order."""
        start, stop = self._source_offsets[u], self._source_offsets[u + 1]
        n = len(self.vertex_triangles)
        key = self._rank[v] * n + self._rank[w]
        return int(start + np.searchsorted(self._keys[start:stop], key))

    def __repr__(self):
        return f"TriangleStore(total={self.total}, lists={self.has_lists})"


def _out_pairs(g, dag, u):
    """Triangles ``(v, w, e_uv, e_uw, e_vw)`` found from source ``u``."""
    outs = dag.out_adj[u]
    edge_id = g.edge_id
    for a, v in enumerate(outs):
        e_uv = edge_id(u, v)
        for w in outs[a + 1:]:
            e_vw = edge_id(v, w)
            if e_vw is not None:
                yield v, w, e_uv, edge_id(u, w), e_vw


def enumerate_triangles(
    g: Graph,
    dag: DegreeOrientedDag,
    memory_budget: Optional[int] = None,
    materialize: bool = True,
) -> TriangleStore:
    """Find every triangle once by testing the pairs of out-neighbours of each vertex.

    A counting pass fills ``T(i)`` and ``T(e)``. When ``materialize`` is set
    and ``BYTES_PER_TRIANGLE * T`` fits ``memory_budget`` (no budget means no
    limit), a second pass fills the triangle rows and per-edge completion
    lists; otherwise the store stays in counting-only mode and a warning is
    logged.

    Parameters
    ----------
    g : Graph
    dag : DegreeOrientedDag
        Orientation of ``g``.
    memory_budget : int, optional
        Bytes the triangle lists may use.
    materialize : bool
        Set to False to skip the lists altogether.
    """
    store = TriangleStore(g.n, g.m)
    vt, et = store.vertex_triangles, store.edge_triangles
    per_source = np.zeros(g.n + 1, dtype=np.int64)
    for u in range(g.n):
        found = 0
        for v, w, e_uv, e_uw, e_vw in _out_pairs(g, dag, u):
            vt[u] += 1
            vt[v] += 1
            vt[w] += 1
            et[e_uv] += 1
            et[e_uw] += 1
            et[e_vw] += 1
            found += 1
        per_source[u + 1] = found
    store.total = int(per_source.sum())
    logger.debug(f"Counted {store.total} triangles")

    if not materialize:
        return store
    if memory_budget is not None and store.required_bytes > memory_budget:
        logger.warning(
            f"Triangle lists need {store.required_bytes} bytes, over the budget of "
            f"{memory_budget}; continuing in counting-only mode."
        )
        return store

    total = store.total
    triangles = np.empty((total, 3), dtype=np.int64)
    triangle_edges = np.empty((total, 3), dtype=np.int64)
    offsets = np.zeros(g.m + 1, dtype=np.int64)
    np.cumsum(et, out=offsets[1:])
    cursor = offsets[:-1].copy()
    pool = np.empty(3 * total, dtype=np.int64)
    row = 0
    for u in range(g.n):
        for v, w, e_uv, e_uw, e_vw in _out_pairs(g, dag, u):
            triangles[row] = (u, v, w)
            triangle_edges[row] = (e_vw, e_uw, e_uv)
            for e, closing in ((e_uv, w), (e_uw, v), (e_vw, u)):
                pool[cursor[e]] = closing
                cursor[e] += 1
            row += 1

    store.triangles = triangles
    store.triangle_edges = triangle_edges
    store.offsets = offsets
    store.pool = pool
    store._source_offsets = np.cumsum(per_source)
    store._rank = dag.rank
    store._keys = dag.rank[triangles[:, 1]] * g.n + dag.rank[triangles[:, 2]]
    return store


def three_report(g: Graph, wedges: WedgeStats, tri: TriangleStore) -> PatternCounts:
    """Non-induced and induced counts of the wedge (``3-1``) and triangle (``3-2``)."""
    noninduced = {"3-1": wedges.wedges, "3-2": tri.total}
    catalog = build_catalog()
    ids = [p.pid for p in catalog.connected(3)]
    induced = catalog.noninduced_to_induced([noninduced[pid] for pid in ids], 3)
    return PatternCounts(3, noninduced, dict(zip(ids, induced)))
