# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
"""Counts of disconnected patterns from the counts of connected ones.

The number of labelled embeddings ``match(H)`` of a disconnected pattern is
the product of the embeddings of its components, minus the embeddings where
components overlap. Every overlap identifies vertices of different
components and turns ``H`` into a smaller pattern, so::

    match(H) = prod(match(H_i)) - sum over merges S of match(H_S)

The recursion is expanded once per pattern into a ``sympy`` polynomial over
the non-induced connected counts (``N[1-1]`` is ``n``, ``N[2-1]`` is ``m``,
``N[3-1]`` the wedge count ``W`` and so on) and then evaluated per graph.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional

import numpy as np
import sympy as sp

from ..errors import IntegrityError
from .catalog import PatternCatalog, build_catalog
from .pattern import canonical_mask, components, edge_mask, induced_mask, mask_edges

logger = logging.getLogger("cutcount")


@lru_cache(maxsize=None)
def count_symbol(pid: str) -> sp.Symbol:
    """Variable standing for the non-induced count of pattern ``pid``."""
    return sp.Symbol(f"N[{pid}]")


def _merges(groups: List[List[int]]) -> Iterator[List[List[int]]]:
    """Partitions of the union of ``groups`` whose blocks take at most one
    vertex from each group."""
    labelled = [(v, g) for g, group in enumerate(groups) for v in group]

    def extend(i, blocks):
        if i == len(labelled):
            yield [[v for v, _ in b] for b in blocks]
            return
        v, g = labelled[i]
        for b in blocks:
            if all(h != g for _, h in b):
                b.append((v, g))
                yield from extend(i + 1, blocks)
                b.pop()
        blocks.append([(v, g)])
        yield from extend(i + 1, blocks)
        blocks.pop()

    yield from extend(0, [])


class _Expander:
    def __init__(self, catalog: PatternCatalog):
        self.catalog = catalog
        self.match = lru_cache(maxsize=None)(self._match)

    def _match(self, k: int, mask: int) -> sp.Expr:
        """Labelled embedding count of the canonical graph ``(k, mask)``."""
        edges = mask_edges(k, mask)
        groups = components(k, edges)
        if len(groups) == 1:
            pattern = self.catalog[self.catalog.classify(k, mask)]
            return pattern.automorphisms * count_symbol(pattern.pid)

        product = sp.Integer(1)
        for group in groups:
            size, sub = induced_mask(group, edges)
            product = product * self.match(size, canonical_mask(size, sub))

        for blocks in _merges(groups):
            if len(blocks) == k:
                continue
            where = {v: b for b, block in enumerate(blocks) for v in block}
            merged = {(min(where[u], where[v]), max(where[u], where[v])) for u, v in edges}
            size = len(blocks)
            product = product - self.match(size, canonical_mask(size, edge_mask(size, merged)))
        return sp.expand(product)


@lru_cache(maxsize=None)
def _polynomials(k: int, catalog: PatternCatalog) -> Dict[str, sp.Expr]:
    expander = _Expander(catalog)
    return {
        p.pid: sp.expand(sp.Rational(1, p.automorphisms) * expander.match(k, p.canonical))
        for p in catalog.disconnected(k)
    }


def disconnected_polynomials(k: int, catalog: Optional[PatternCatalog] = None) -> Dict[str, sp.Expr]:
    """Non-induced count of every disconnected ``k``-pattern as a polynomial
    in the non-induced connected counts of smaller sizes."""
    return dict(_polynomials(k, catalog or build_catalog()))


def disconnected_counts(
    connected: Mapping[str, int],
    n: int,
    k: int,
    catalog: Optional[PatternCatalog] = None,
) -> Dict[str, int]:
    """Induced counts of the disconnected ``k``-vertex patterns.

    Parameters
    ----------
    connected : mapping of str to int
        Induced counts of the connected patterns of every size ``2..k``, keyed
        by pattern id. Missing ids count as zero.
    n : int
        Number of vertices of the host graph, isolated vertices included.
    k : int
        Pattern size, ``2 <= k <= 5``.

    Returns
    -------
    dict
        Pattern id to induced count for every disconnected ``k``-pattern.

    Raises
    ------
    IntegrityError
        When a count comes out negative or fractional.
    """
    if not 2 <= k <= 5:
        raise ValueError(f"pattern size must be between 2 and 5, got {k}")
    catalog = catalog or build_catalog()

    noninduced = {"1-1": n}
    for size in range(2, k + 1):
        ps = catalog.connected(size)
        induced = [int(connected.get(p.pid, 0)) for p in ps]
        for p, value in zip(ps, catalog.induced_to_noninduced(induced, size)):
            noninduced[p.pid] = value

    values = {count_symbol(pid): sp.Integer(v) for pid, v in noninduced.items()}
    for pid, polynomial in _polynomials(k, catalog).items():
        value = polynomial.subs(values)
        if not value.is_Integer or value < 0:
            raise IntegrityError(
                f"non-induced count {value} is not a nonnegative integer", pattern_id=pid
            )
        noninduced[pid] = int(value)

    ps = catalog.patterns(k)
    vector = np.array([noninduced[p.pid] for p in ps], dtype=object)
    induced = catalog.inverse_matrix(k).dot(vector)
    counts = {}
    for p, value in zip(ps, induced):
        if p.connected:
            continue
        if value < 0:
            raise IntegrityError(f"induced count {value} is negative", pattern_id=p.pid)
        counts[p.pid] = int(value)
    logger.debug(f"Derived {len(counts)} disconnected {k}-vertex counts")
    return counts
