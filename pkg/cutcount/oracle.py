# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Optional

from .errors import BudgetExceededError
from .graph import Graph
from .parallel import sum_over_ranges
from .patterns.catalog import build_catalog
from .patterns.pattern import pair_bits

logger = logging.getLogger("cutcount")

DEFAULT_ORACLE_BUDGET = 5_000_000


@dataclass
class OracleResult:
    """Exact induced counts of every ``size``-vertex pattern, connected or not,
    and the non-induced counts implied by them."""

    size: int
    induced: Dict[str, int]
    noninduced: Dict[str, int]

    def connected(self, counts: Dict[str, int]) -> Dict[str, int]:
        catalog = build_catalog()
        return {p.pid: counts[p.pid] for p in catalog.connected(self.size)}


def _classify_kernel(payload, start, stop):
    g, k = payload
    catalog = build_catalog()
    index = {p.pid: i for i, p in enumerate(catalog.patterns(k))}
    bits = list(pair_bits(k).items())
    has_edge = g.has_edge
    counts = [0] * len(index)
    for first in range(start, stop):
        for rest in combinations(range(first + 1, g.n), k - 1):
            vertices = (first,) + rest
            mask = 0
            for (a, b), bit in bits:
                if has_edge(vertices[a], vertices[b]):
                    mask |= 1 << bit
            counts[index[catalog.classify(k, mask)]] += 1
    return tuple(counts)


def brute_force_induced(
    g: Graph,
    k: int,
    budget: Optional[int] = DEFAULT_ORACLE_BUDGET,
    workers: int = 1,
) -> OracleResult:
    """Classify every ``k``-subset of ``g`` by the isomorphism class of its induced subgraph.

    Parameters
    ----------
    g : Graph
    k : int
        Pattern size, 2 to 5.
    budget : int, optional
        Largest number of subsets to enumerate; ``None`` disables the check.
    workers : int
        Processes to spread the enumeration over.

    Raises
    ------
    BudgetExceededError
        When ``C(n, k)`` exceeds ``budget``.
    """
    if not 2 <= k <= 5:
        raise ValueError(f"pattern size must be between 2 and 5, got {k}")
    subsets = comb(g.n, k)
    if budget is not None and subsets > budget:
        raise BudgetExceededError(
            f"enumerating all {k}-subsets of {g.n} vertices is over the oracle budget",
            required=subsets,
            budget=budget,
        )
    catalog = build_catalog()
    counts = sum_over_ranges(_classify_kernel, (g, k), g.n, workers) if g.n else ()
    ids = [p.pid for p in catalog.patterns(k)]
    induced = dict(zip(ids, counts)) if counts else dict.fromkeys(ids, 0)
    noninduced = dict(
        zip(ids, catalog.induced_to_noninduced([induced[pid] for pid in ids], k))
    )
    logger.debug(f"Oracle classified {subsets} {k}-subsets")
    return OracleResult(k, induced, noninduced)
