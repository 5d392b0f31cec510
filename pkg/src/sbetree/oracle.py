"""Brute-force baselines that share nothing with the tree search.

They read only ``g.n`` and ``g.edges`` and scan exhaustively, so they are
guarded by hard size limits.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .enumerate import IndependentFamily
from .graph import Graph, VertexSubset

__all__ = [
    "OracleTooLarge",
    "independent_mask_table",
    "brute_all_independent_sets",
    "brute_maximal_independent_sets",
    "brute_mis",
    "brute_chromatic",
    "count_sbe_trees",
]

MAX_SCAN_N = 24
MAX_CHROMATIC_N = 10


class OracleTooLarge(ValueError):
    pass


def _guard(g: Graph, limit: int):
    if g.n > limit:
        raise OracleTooLarge(f"brute force refused for n={g.n} > {limit}")


def independent_mask_table(g: Graph) -> np.ndarray:
    """Boolean array over all 2**n masks: True where the mask is independent."""
    _guard(g, MAX_SCAN_N)
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for u, v in g.edges:
        ok &= ((masks >> (u - 1)) & (masks >> (v - 1)) & 1) == 0
    return ok


def _popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


def brute_all_independent_sets(g: Graph) -> IndependentFamily:
    ok = independent_mask_table(g)
    ok[0] = False
    return IndependentFamily.from_sets(g.n, (int(s) for s in np.flatnonzero(ok)))


def brute_maximal_independent_sets(g: Graph) -> set[VertexSubset]:
    ok = independent_mask_table(g)
    out = set()
    for s in np.flatnonzero(ok):
        s = int(s)
        if not any(ok[s | 1 << v] for v in range(g.n) if not s >> v & 1):
            out.add(s)
    return out


def brute_mis(g: Graph) -> tuple[int, list[VertexSubset]]:
    """Independence number and every maximum independent set, ascending."""
    ok = independent_mask_table(g)
    sizes = np.where(ok, _popcounts(g.n), -1)
    alpha = int(sizes.max())
    return alpha, [int(s) for s in np.flatnonzero(sizes == alpha)]


def brute_chromatic(g: Graph) -> tuple[int, set[frozenset[VertexSubset]]]:
    """Chromatic number and every optimal partition into independent classes.

    Vertices are placed one at a time into an existing class they have no
    neighbour in, or into a new class, which visits every partition into
    independent classes exactly once.
    """
    _guard(g, MAX_CHROMATIC_N)
    nbr = [0] * (g.n + 1)
    for u, v in g.edges:
        nbr[u] |= 1 << (v - 1)
        nbr[v] |= 1 << (u - 1)
    best = g.n
    found: set[frozenset[VertexSubset]] = set()
    classes: list[int] = []

    def place(v: int):
        nonlocal best, found
        if len(classes) > best:
            return
        if v > g.n:
            part = frozenset(classes)
            if len(classes) < best:
                best, found = len(classes), {part}
            else:
                found.add(part)
            return
        bit = 1 << (v - 1)
        for i, c in enumerate(classes):
            if not c & nbr[v]:
                classes[i] = c | bit
                place(v + 1)
                classes[i] = c
        classes.append(bit)
        place(v + 1)
        classes.pop()

    place(1)
    return best, found


def count_sbe_trees(g: Graph) -> int:
    """Number of distinct SBE-trees of ``g`` when any internal edge may split a node.

    Counts by exhaustive recursion over every edge choice at every node.
    """
    _guard(g, MAX_SCAN_N)
    edges = [(1 << (u - 1), 1 << (v - 1)) for u, v in g.edges]

    @lru_cache(maxsize=None)
    def count(node: int) -> int:
        total = 0
        leaf = True
        for bu, bv in edges:
            if node & bu and node & bv:
                leaf = False
                total += count(node ^ bu) * count(node ^ bv)
        return 1 if leaf else total

    return count(g.vertex_mask)

