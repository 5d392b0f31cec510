"""Closed forms and linear-time counts for SBE-trees of complete graphs and paths.

Everything here is exact integer arithmetic except the two split-count
predictions, which are real-valued reference curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "WidthProfile",
    "sbe_size_complete",
    "usbe_size_complete",
    "count_sbe_trees_complete",
    "path_width_profile",
    "path_tree_size",
    "fibonacci",
    "moebius_split_prediction",
    "random_split_prediction",
    "MOEBIUS_SLOPE",
    "RANDOM_SLOPE",
]

MOEBIUS_SLOPE = 0.347120956815
MOEBIUS_OFFSET_MOD4 = 1.66485616037
MOEBIUS_OFFSET_MOD2 = 1.74055665759
RANDOM_SLOPE = 0.369425
RANDOM_OFFSET = 0.56325


@dataclass(frozen=True)
class WidthProfile:
    widths: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.widths)

    def __len__(self) -> int:
        return len(self.widths)


def sbe_size_complete(n: int) -> int:
    """Node count of any SBE-tree of K_n: every split continues to singletons."""
    _check_positive(n)
    return 2**n - 1


def usbe_size_complete(n: int) -> int:
    """Node count of the uniquified tree of K_n; layer ``l`` holds ``l + 1`` subsets."""
    _check_positive(n)
    return math.comb(n + 1, 2)


def count_sbe_trees_complete(n: int) -> int:
    """Number of distinct SBE-trees of K_n over all edge choices.

    A k-clique node can be split by any of its C(k, 2) edges and both children
    are (k-1)-cliques, so T(k) = C(k, 2) * T(k-1)**2 with T(1) = 1.
    """
    _check_positive(n)
    t = 1
    for k in range(2, n + 1):
        t = math.comb(k, 2) * t * t
    return t


def path_width_profile(n: int) -> WidthProfile:
    """Layer widths of the SBE-tree of the n-vertex path, without building it.

    Splitting by (1, 2) leaves the path 2..n on the left and vertex 1 plus the
    path 3..n on the right, and the two subtrees share no node, so
    w_n(l) = w_{n-1}(l-1) + w_{n-2}(l-1) with w_0 = w_1 = [1].
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    prev, cur = [1], [1]  # w_{k-1}, w_k for k = 1
    if n <= 1:
        return WidthProfile((1,))
    for _ in range(2, n + 1):
        below = [a + b for a, b in _zip_pad(cur, prev)]
        prev, cur = cur, [1] + below
    return WidthProfile(tuple(cur))


def _zip_pad(a: list[int], b: list[int]):
    size = max(len(a), len(b))
    return zip(a + [0] * (size - len(a)), b + [0] * (size - len(b)))


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def path_tree_size(n: int) -> int:
    """2 * Fib(n + 1) - 1, the SBE (and USBE) size of the n-vertex path."""
    return 2 * fibonacci(n + 1) - 1


def moebius_split_prediction(n: int) -> float:
    """Fitted split count for the Möbius ladder on ``n`` vertices."""
    if n < 4 or n % 2:
        raise ValueError(f"Möbius ladders need even n >= 4, got {n}")
    offset = MOEBIUS_OFFSET_MOD4 if n % 4 == 0 else MOEBIUS_OFFSET_MOD2
    return 2 ** (MOEBIUS_SLOPE * n + offset) - 2


def random_split_prediction(n: float) -> float:
    """Fitted maximum split count for random graphs on ``n`` vertices."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return 2 ** (RANDOM_SLOPE * n + RANDOM_OFFSET)


def _check_positive(n: int):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
