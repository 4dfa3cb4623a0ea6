# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..errors import CatalogIntegrityError, IntegrityError
from .matrices import FIVE_VERTEX_INVERSE, FIVE_VERTEX_OCCURRENCES
from .pattern import Pattern, canonical_mask, copies_in

logger = logging.getLogger("cutcount")

_TRIANGLE = ((0, 1), (1, 2), (0, 2))
_C4 = ((0, 1), (1, 2), (2, 3), (0, 3))
_K4 = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_DIAMOND = ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3))

# fmt: off
PATTERN_TABLE = (
    ("1-1", "vertex", 1, ()),

    ("2-1", "edge", 2, ((0, 1),)),
    ("2-2", "independent_2", 2, ()),

    ("3-1", "wedge", 3, ((0, 1), (0, 2))),
    ("3-2", "triangle", 3, _TRIANGLE),
    ("3-3", "edge_and_vertex", 3, ((0, 1),)),
    ("3-4", "independent_3", 3, ()),

    ("4-1", "three_star", 4, ((0, 1), (0, 2), (0, 3))),
    ("4-2", "three_path", 4, ((0, 1), (1, 2), (2, 3))),
    ("4-3", "tailed_triangle", 4, _TRIANGLE + ((0, 3),)),
    ("4-4", "four_cycle", 4, _C4),
    ("4-5", "diamond", 4, _DIAMOND),
    ("4-6", "four_clique", 4, _K4),
    ("4-7", "independent_4", 4, ()),
    ("4-8", "edge_and_two_vertices", 4, ((0, 1),)),
    ("4-9", "two_edges", 4, ((0, 1), (2, 3))),
    ("4-10", "wedge_and_vertex", 4, ((0, 1), (0, 2))),
    ("4-11", "triangle_and_vertex", 4, _TRIANGLE),

    ("5-1", "four_star", 5, ((0, 1), (0, 2), (0, 3), (0, 4))),
    ("5-2", "fork", 5, ((0, 1), (0, 2), (0, 3), (1, 4))),
    ("5-3", "four_path", 5, ((0, 1), (1, 2), (2, 3), (3, 4))),
    ("5-4", "cricket", 5, _TRIANGLE + ((0, 3), (0, 4))),
    ("5-5", "long_tailed_triangle", 5, _TRIANGLE + ((0, 3), (3, 4))),
    ("5-6", "bull", 5, _TRIANGLE + ((0, 3), (1, 4))),
    ("5-7", "banner", 5, _C4 + ((0, 4),)),
    ("5-8", "five_cycle", 5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    ("5-9", "bowtie", 5, _TRIANGLE + ((0, 3), (0, 4), (3, 4))),
    ("5-10", "tip_tailed_diamond", 5, _DIAMOND + ((2, 4),)),
    ("5-11", "chord_tailed_diamond", 5, _DIAMOND + ((0, 4),)),
    ("5-12", "house", 5, _C4 + ((0, 4), (1, 4))),
    ("5-13", "complete_bipartite_2_3", 5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
    ("5-14", "three_page_book", 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
    ("5-15", "tailed_four_clique", 5, _K4 + ((0, 4),)),
    ("5-16", "gem", 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4))),
    ("5-17", "bipartite_2_3_with_edge", 5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3))),
    ("5-18", "wheel", 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4))),
    ("5-19", "eared_four_clique", 5, _K4 + ((0, 4), (1, 4))),
    ("5-20", "almost_five_clique", 5, _K4 + ((0, 4), (1, 4), (2, 4))),
    ("5-21", "five_clique", 5, _K4 + ((0, 4), (1, 4), (2, 4), (3, 4))),
    ("5-22", "independent_5", 5, ()),
    ("5-23", "edge_and_three_vertices", 5, ((0, 1),)),
    ("5-24", "two_edges_and_vertex", 5, ((0, 1), (2, 3))),
    ("5-25", "wedge_and_two_vertices", 5, ((0, 1), (0, 2))),
    ("5-26", "triangle_and_two_vertices", 5, _TRIANGLE),
    ("5-27", "three_star_and_vertex", 5, ((0, 1), (0, 2), (0, 3))),
    ("5-28", "three_path_and_vertex", 5, ((0, 1), (1, 2), (2, 3))),
    ("5-29", "wedge_and_edge", 5, ((0, 1), (0, 2), (3, 4))),
    ("5-30", "tailed_triangle_and_vertex", 5, _TRIANGLE + ((0, 3),)),
    ("5-31", "four_cycle_and_vertex", 5, _C4),
    ("5-32", "triangle_and_edge", 5, _TRIANGLE + ((3, 4),)),
    ("5-33", "diamond_and_vertex", 5, _DIAMOND),
    ("5-34", "four_clique_and_vertex", 5, _K4),
)
# fmt: on

ATLAS_SIZES = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}


class PatternCatalog:
    """The atlas of every graph on at most five vertices.

    For each size ``k`` the catalog holds the patterns in id order together
    with the occurrence matrix ``A`` (``A[i][j]`` copies of pattern ``i`` in
    pattern ``j``) and its exact inverse. Connected patterns only occur in
    connected patterns, so the connected block of ``A`` is closed and converts
    connected counts on its own.

    Use :func:`build_catalog` rather than constructing this directly; the
    instance it returns is shared and must be treated as read-only.
    """

    def __init__(self, patterns: Sequence[Pattern]):
        self._by_id = {p.pid: p for p in patterns}
        self._by_name = {p.name: p for p in patterns}
        self._sizes: Dict[int, List[Pattern]] = {}
        for p in patterns:
            self._sizes.setdefault(p.size, []).append(p)
        self._classes = {
            k: {p.canonical: p.pid for p in ps} for k, ps in self._sizes.items()
        }
        self._occurrences = {}
        self._inverses = {}
        for k, ps in self._sizes.items():
            occ = np.array(
                [[copies_in(k, a.mask, b.mask) for b in ps] for a in ps], dtype=object
            )
            signs = np.array(
                [[(-1) ** ((b.edge_count - a.edge_count) % 2) for b in ps] for a in ps],
                dtype=object,
            )
            self._occurrences[k] = occ
            self._inverses[k] = occ * signs

    def __getitem__(self, pid: str) -> Pattern:
        return self._by_id[pid]

    def __contains__(self, pid) -> bool:
        return pid in self._by_id

    def __iter__(self):
        return iter(self._by_id.values())

    def by_name(self, name: str) -> Pattern:
        return self._by_name[name]

    def patterns(self, size: int) -> List[Pattern]:
        return list(self._sizes[size])

    def connected(self, size: int) -> List[Pattern]:
        return [p for p in self._sizes[size] if p.connected]

    def disconnected(self, size: int) -> List[Pattern]:
        return [p for p in self._sizes[size] if not p.connected]

    def classify(self, size: int, mask: int) -> str:
        """Pattern id of the graph on ``size`` vertices encoded by ``mask``."""
        return self._classes[size][canonical_mask(size, mask)]

    def occurrence_matrix(self, size: int, connected_only: bool = False) -> np.ndarray:
        """Exact (object dtype) matrix ``A`` with ``N = A C``."""
        return self._block(self._occurrences[size], size, connected_only)

    def inverse_matrix(self, size: int, connected_only: bool = False) -> np.ndarray:
        """Exact inverse of :meth:`occurrence_matrix`, signed by edge-count parity."""
        return self._block(self._inverses[size], size, connected_only)

    def _block(self, matrix, size, connected_only):
        if not connected_only:
            return matrix.copy()
        count = len(self.connected(size))
        return matrix[:count, :count].copy()

    def _resolve(self, counts, size):
        """Size and connected-only flag from the length of ``counts``."""
        length = len(counts)
        if size is None:
            for k, ps in self._sizes.items():
                if length in (len(ps), len(self.connected(k))) and k > 2:
                    size = k
                    break
            else:
                raise ValueError(f"cannot infer pattern size from {length} counts")
        connected_count = len(self.connected(size))
        if length == connected_count:
            return size, True
        if length == len(self._sizes[size]):
            return size, False
        raise ValueError(
            f"expected {connected_count} or {len(self._sizes[size])} counts for size {size}, got {length}"
        )

    def noninduced_to_induced(self, counts: Sequence[int], size: Optional[int] = None) -> List[int]:
        """Convert non-induced counts ``N`` into induced counts ``C = A^-1 N``.

        Parameters
        ----------
        counts : sequence of int
            Either the connected counts of one size (6 for ``k = 4``, 21 for
            ``k = 5``) or the counts of the whole size-``k`` atlas.
        size : int, optional
            Pattern size; inferred from ``len(counts)`` when omitted.

        Raises
        ------
        IntegrityError
            When an induced count comes out negative, which only happens when
            the non-induced counts are mutually inconsistent.
        """
        size, connected_only = self._resolve(counts, size)
        vector = np.array([int(c) for c in counts], dtype=object)
        induced = self.inverse_matrix(size, connected_only).dot(vector)
        ids = [p.pid for p in self._sizes[size]]
        for pid, value in zip(ids, induced):
            if value < 0:
                raise IntegrityError(
                    f"induced count {value} is negative; the non-induced counts are inconsistent",
                    pattern_id=pid,
                )
        return [int(v) for v in induced]

    def induced_to_noninduced(self, counts: Sequence[int], size: Optional[int] = None) -> List[int]:
        size, connected_only = self._resolve(counts, size)
        vector = np.array([int(c) for c in counts], dtype=object)
        return [int(v) for v in self.occurrence_matrix(size, connected_only).dot(vector)]

    def to_dict(self) -> dict:
        """Machine-readable description of the atlas for the ``catalog`` command."""
        from .disconnected import disconnected_polynomials

        sizes = {}
        for k, ps in self._sizes.items():
            polynomials = disconnected_polynomials(k, self) if k > 1 else {}
            entries = []
            for row, p in enumerate(ps):
                entry = p.to_dict()
                entry["occurrences"] = [int(v) for v in self._occurrences[k][row]]
                if p.pid in polynomials:
                    entry["noninduced_polynomial"] = str(polynomials[p.pid])
                entries.append(entry)
            sizes[str(k)] = entries
        return {"sizes": sizes}

    def __repr__(self):
        return f"PatternCatalog({', '.join(f'{k}: {len(ps)}' for k, ps in self._sizes.items())})"


def _check(catalog: PatternCatalog):
    for k, expected in ATLAS_SIZES.items():
        ps = catalog.patterns(k)
        if len(ps) != expected:
            raise CatalogIntegrityError(f"size {k} holds {len(ps)} patterns, expected {expected}")
        if len({p.canonical for p in ps}) != len(ps):
            raise CatalogIntegrityError(f"size {k} holds isomorphic patterns")
        connected = [p.connected for p in ps]
        if connected != sorted(connected, reverse=True):
            raise CatalogIntegrityError(f"size {k} lists a disconnected pattern before a connected one")
        product = catalog.occurrence_matrix(k).dot(catalog.inverse_matrix(k))
        if not np.array_equal(product, np.identity(len(ps), dtype=int)):
            raise CatalogIntegrityError(f"occurrence matrix of size {k} is not inverted by its signed copy")

    published = np.array(FIVE_VERTEX_OCCURRENCES, dtype=object)
    published_inverse = np.array(FIVE_VERTEX_INVERSE, dtype=object)
    recomputed = catalog.occurrence_matrix(5, connected_only=True)
    if not np.array_equal(recomputed, published):
        rows, cols = np.nonzero(recomputed != published)
        i, j = int(rows[0]), int(cols[0])
        raise CatalogIntegrityError(
            f"recomputed occurrences of 5-{i + 1} in 5-{j + 1} are {recomputed[i, j]}, "
            f"published table says {published[i, j]}",
            pattern_id=f"5-{i + 1}",
        )
    if not np.array_equal(published.dot(published_inverse), np.identity(21, dtype=int)):
        raise CatalogIntegrityError("published 5-vertex tables are not inverse to each other")
    if not np.array_equal(catalog.inverse_matrix(5, connected_only=True), published_inverse):
        raise CatalogIntegrityError("recomputed 5-vertex inverse differs from the published table")


@lru_cache(maxsize=None)
def build_catalog() -> PatternCatalog:
    """Build, self-check and return the shared pattern atlas.

    Raises
    ------
    CatalogIntegrityError
        When the recomputed occurrence matrices disagree with the published
        5-vertex tables or fail to invert exactly.
    """
    patterns = [Pattern(pid, name, size, edges) for pid, name, size, edges in PATTERN_TABLE]
    catalog = PatternCatalog(patterns)
    _check(catalog)
    logger.debug(f"Built {catalog!r}")
    return catalog


def noninduced_to_induced(counts: Sequence[int], size: Optional[int] = None) -> List[int]:
    """Module-level shortcut for :meth:`PatternCatalog.noninduced_to_induced`."""
    return build_catalog().noninduced_to_induced(counts, size)


def induced_to_noninduced(counts: Sequence[int], size: Optional[int] = None) -> List[int]:
    return build_catalog().induced_to_noninduced(counts, size)
