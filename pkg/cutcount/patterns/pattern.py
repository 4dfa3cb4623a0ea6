# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
"""Small-graph primitives shared by the catalog, the oracle and the
disconnected-pattern derivation.

A graph on ``k <= 5`` vertices ``0..k-1`` is encoded as an integer bitmask
over the vertex pairs ``(i, j), i < j``, in lexicographic order.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Tuple

MAX_PATTERN_SIZE = 5

Edge = Tuple[int, int]


@lru_cache(maxsize=None)
def pair_bits(k: int) -> dict:
    """Bit position of each vertex pair ``(i, j), i < j`` on ``k`` vertices."""
    return {pair: bit for bit, pair in enumerate(combinations(range(k), 2))}


def edge_mask(k: int, edges) -> int:
    bits = pair_bits(k)
    mask = 0
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) in pattern")
        mask |= 1 << bits[(min(u, v), max(u, v))]
    return mask


def mask_edges(k: int, mask: int) -> List[Edge]:
    return [pair for pair, bit in pair_bits(k).items() if mask >> bit & 1]


def permute_mask(k: int, mask: int, perm) -> int:
    bits = pair_bits(k)
    out = 0
    for (u, v), bit in bits.items():
        if mask >> bit & 1:
            a, b = perm[u], perm[v]
            out |= 1 << bits[(min(a, b), max(a, b))]
    return out


@lru_cache(maxsize=None)
def canonical_mask(k: int, mask: int) -> int:
    """Smallest bitmask over all relabellings; equal iff the graphs are isomorphic."""
    return min(permute_mask(k, mask, perm) for perm in permutations(range(k)))


def automorphism_count(k: int, mask: int) -> int:
    return sum(1 for perm in permutations(range(k)) if permute_mask(k, mask, perm) == mask)


def components(k: int, edges) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by their smallest vertex."""
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for v in range(k):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def induced_mask(vertices, edges) -> Tuple[int, int]:
    """Relabel the subgraph of ``edges`` spanned by ``vertices`` to ``0..len-1``."""
    relabel = {v: i for i, v in enumerate(vertices)}
    inside = [(relabel[u], relabel[v]) for u, v in edges if u in relabel and v in relabel]
    return len(vertices), edge_mask(len(vertices), inside)


def copies_in(k: int, small: int, big: int) -> int:
    """Number of subgraphs of ``big`` isomorphic to ``small`` on the same ``k`` vertices."""
    embeddings = sum(
        1 for perm in permutations(range(k)) if permute_mask(k, small, perm) & ~big == 0
    )
    return embeddings // automorphism_count(k, small)


@dataclass(frozen=True)
class Pattern:
    """One isomorphism class of graphs on ``size`` vertices.

    Parameters
    ----------
    pid : str
        Catalog id ``"k-i"``; connected patterns come first, then the
        disconnected ones, each group ordered by edge count.
    name : str
        Snake-case display name used as the second report key.
    size : int
        Number of vertices ``k``.
    edges : tuple of (int, int)
        Representative edge list on vertices ``0..k-1``.
    """

    pid: str
    name: str
    size: int
    edges: Tuple[Edge, ...]
    mask: int = field(init=False, repr=False)
    canonical: int = field(init=False, repr=False)
    automorphisms: int = field(init=False)
    connected: bool = field(init=False)

    def __post_init__(self):
        mask = edge_mask(self.size, self.edges)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "canonical", canonical_mask(self.size, mask))
        object.__setattr__(self, "automorphisms", automorphism_count(self.size, mask))
        object.__setattr__(
            self, "connected", len(components(self.size, self.edges)) == 1
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {
            "id": self.pid,
            "name": self.name,
            "size": self.size,
            "edges": [list(e) for e in self.edges],
            "automorphisms": self.automorphisms,
            "connected": self.connected,
        }
