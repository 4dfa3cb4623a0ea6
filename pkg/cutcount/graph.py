# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from typing import Iterable, Optional, Sequence, Tuple

import fsspec
import numpy as np

from .errors import GraphFormatError

logger = logging.getLogger("cutcount")

COMMENT_PREFIXES = ("#", "%")


class Graph:
    """Immutable undirected simple graph in compressed (CSR) adjacency form.

    Vertices are the dense ids ``0..n-1``. ``labels[i]`` keeps the id the
    vertex had in the input so that reports can be written in the caller's
    terms.

    Parameters
    ----------
    num_vertices : int
        Number of vertices ``n``, isolated vertices included.
    indptr : array-like of int
        CSR row pointer of length ``n + 1``.
    indices : array-like of int
        CSR column indices; every row strictly increasing, the structure
        symmetric and free of self-loops.
    labels : sequence, optional
        Input id of each dense vertex. Defaults to the dense ids themselves.
    dropped : int
        Number of self-loops and duplicate edges removed while normalizing.
    name : str, optional
        Name of the input the graph was read from.
    """

    def __init__(
        self,
        num_vertices: int,
        indptr,
        indices,
        labels: Optional[Sequence] = None,
        dropped: int = 0,
        name: Optional[str] = None,
    ):
        self.n = int(num_vertices)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        if len(self.indptr) != self.n + 1:
            raise ValueError(
                f"indptr has length {len(self.indptr)}, expected {self.n + 1}"
            )
        self.degrees = np.diff(self.indptr)
        self.m = len(self.indices) // 2
        self.labels = tuple(labels) if labels is not None else tuple(range(self.n))
        self.dropped = int(dropped)
        self.name = name

        self.adjacency = [
            row.tolist() for row in np.split(self.indices, self.indptr[1:-1])
        ] if self.n else []

        sources = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        upper = sources < self.indices
        self.edge_u = sources[upper]
        self.edge_v = self.indices[upper]
        keys = self.edge_u * self.n + self.edge_v
        self._edge_index = dict(zip(keys.tolist(), range(self.m)))

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[Tuple[int, int]],
        num_vertices: Optional[int] = None,
        labels: Optional[Sequence] = None,
        name: Optional[str] = None,
    ) -> "Graph":
        """Build a graph from dense-id pairs, ignoring direction, loops and repeats."""
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if num_vertices is None:
            num_vertices = int(arr.max()) + 1 if len(arr) else 0
        n = int(num_vertices)
        if len(arr) and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"vertex id out of range for n={n}")

        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        proper = lo != hi
        keys = np.unique(lo[proper] * n + hi[proper])
        dropped = len(arr) - len(keys)
        lo, hi = keys // n if n else keys, keys % n if n else keys

        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        order = np.lexsort((cols, rows))
        indices = cols[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        return cls(n, indptr, indices, labels=labels, dropped=dropped, name=name)

    def neighbors(self, v: int) -> list:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def edge_id(self, u: int, v: int) -> Optional[int]:
        """Dense id of edge {u, v}, or None when the pair is not an edge."""
        if u > v:
            u, v = v, u
        return self._edge_index.get(u * self.n + v)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return u * self.n + v in self._edge_index

    def edges(self):
        """Iterate over the undirected edges as ``(u, v)`` with ``u < v``, in edge-id order."""
        return zip(self.edge_u.tolist(), self.edge_v.tolist())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return f"Graph(name={self.name!r}, n={self.n}, m={self.m})"


def _parse_pair(tokens, lineno, line):
    if len(tokens) != 2:
        raise GraphFormatError(
            f"expected 2 integer tokens, found {len(tokens)}", lineno=lineno, line=line
        )
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphFormatError(
            f"non-integer token in {line.strip()!r}", lineno=lineno, line=line
        ) from None


def load_edge_list(
    source: Iterable[str],
    num_vertices: Optional[int] = None,
    header: bool = False,
    name: Optional[str] = None,
) -> Graph:
    """Parse a whitespace separated edge list into a normalized :class:`Graph`.

    Lines starting with ``#`` or ``%`` and blank lines are skipped. Input ids
    are compacted to ``0..n-1`` in order of first appearance; direction,
    self-loops and duplicates are dropped.

    Parameters
    ----------
    source : iterable of str
        A text stream or any iterable of lines.
    num_vertices : int, optional
        Fix ``n`` above the number of distinct ids seen; the extra vertices are
        isolated and carry the label ``None``.
    header : bool
        Interpret the first non-comment line as ``"n m"``. The declared ``n``
        applies when ``num_vertices`` is not given; a mismatching ``m`` is
        logged.
    name : str, optional
        Name recorded on the graph.

    Raises
    ------
    GraphFormatError
        On a line that does not hold exactly two integers, or when
        ``num_vertices`` is smaller than the number of distinct ids.
    """
    compact = {}
    pairs = []
    declared = None
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIXES):
            continue
        a, b = _parse_pair(stripped.split(), lineno, line)
        if header and declared is None:
            declared = (a, b)
            continue
        pairs.append((compact.setdefault(a, len(compact)), compact.setdefault(b, len(compact))))

    labels = list(compact)
    if num_vertices is None and declared is not None:
        num_vertices = declared[0]
    if num_vertices is not None:
        if num_vertices < len(labels):
            raise GraphFormatError(
                f"{len(labels)} distinct vertex ids exceed the declared vertex count {num_vertices}"
            )
        labels.extend([None] * (num_vertices - len(labels)))

    graph = Graph.from_edges(pairs, num_vertices=len(labels), labels=labels, name=name)
    if graph.dropped:
        logger.warning(
            f"Dropped {graph.dropped} self-loops and duplicate edges from {name or 'input'}."
        )
    if declared is not None and declared[1] != graph.m:
        logger.warning(
            f"Header declares {declared[1]} edges, {graph.m} remain after normalization."
        )
    logger.debug(f"Loaded {graph!r}")
    return graph


def read_edge_list(urlpath: str, storage_options: Optional[dict] = None, **kwargs) -> Graph:
    """Open ``urlpath`` through fsspec and parse it with :func:`load_edge_list`.

    Any protocol fsspec knows works (local paths, ``memory://``, ``oci://``
    with ocifs installed); compression is inferred from the file suffix.
    """
    storage_options = storage_options or dict()
    kwargs.setdefault("name", urlpath)
    with fsspec.open(urlpath, mode="rt", compression="infer", **storage_options) as f:
        return load_edge_list(f, **kwargs)


class DegreeOrientedDag:
    """Acyclic orientation of a :class:`Graph` under the degree order.

    ``u`` precedes ``v`` when ``d(u) < d(v)``, or when the degrees tie and
    ``u < v``. Every edge points from the preceding endpoint to the other, so
    out-neighbourhoods hold the higher-degree side. ``out_adj[u]`` and
    ``in_adj[u]`` are sorted by rank.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        n = graph.n
        self.order = np.lexsort((np.arange(n, dtype=np.int64), graph.degrees))
        self.rank = np.empty(n, dtype=np.int64)
        self.rank[self.order] = np.arange(n, dtype=np.int64)

        u, v = graph.edge_u, graph.edge_v
        forward = self.rank[u] < self.rank[v]
        low = np.where(forward, u, v)
        high = np.where(forward, v, u)

        self.out_indptr, self.out_indices = _grouped(low, high, self.rank[high], n)
        self.in_indptr, self.in_indices = _grouped(high, low, self.rank[low], n)
        self.out_degree = np.diff(self.out_indptr)
        self.in_degree = np.diff(self.in_indptr)

        self.rank_list = self.rank.tolist()
        self.out_adj = _rows(self.out_indptr, self.out_indices, n)
        self.in_adj = _rows(self.in_indptr, self.in_indices, n)

    def precedes(self, u: int, v: int) -> bool:
        return self.rank_list[u] < self.rank_list[v]

    def edges(self):
        """Iterate over the directed edges ``(low, high)``."""
        for u, outs in enumerate(self.out_adj):
            for v in outs:
                yield u, v

    def __repr__(self):
        return f"DegreeOrientedDag(n={self.graph.n}, m={self.graph.m})"


def _grouped(keys, values, sort_by, n):
    order = np.lexsort((sort_by, keys))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=n), out=indptr[1:])
    return indptr, values[order]


def _rows(indptr, indices, n):
    if not n:
        return []
    return [row.tolist() for row in np.split(indices, indptr[1:-1])]


def build_degree_ordered_dag(g: Graph) -> DegreeOrientedDag:
    """Orient every edge of ``g`` from its degree-order-smaller endpoint to the larger."""
    dag = DegreeOrientedDag(g)
    logger.debug(
        f"Oriented {g.m} edges; max out-degree {int(dag.out_degree.max()) if g.n else 0}."
    )
    return dag
