"""Chromatic number and colourings assembled from disjoint independent sets.

A k-colouring is a partition of the vertices into k independent classes. The
class sizes form a multiset of k numbers in [1, alpha] adding up to n (an
"add-up set"), so each candidate size profile is searched in turn, drawing one
set per part from the bucket of independent sets of that size.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .engine import DEFAULT_NODE_BUDGET
from .enumerate import IndependentFamily, all_independent_sets
from .graph import Graph, VertexSubset, format_subset, is_independent, to_labels
from .mis import find_mis

__all__ = [
    "PartitionSpec",
    "Coloring",
    "add_up_sets",
    "find_coloring_for_spec",
    "iter_colorings_for_spec",
    "chromatic_number",
    "all_colorings",
]

PartitionSpec = tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    """An unordered partition into colour classes.

    Classes are stored largest first, ties broken by their sorted labels, so
    two colourings are equal exactly when they are the same partition.
    """

    classes: tuple[VertexSubset, ...]

    @classmethod
    def of(cls, classes) -> Coloring:
        return cls(tuple(sorted(classes, key=lambda c: (-c.bit_count(), to_labels(c)))))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> PartitionSpec:
        return tuple(c.bit_count() for c in self.classes)

    def validate(self, g: Graph) -> None:
        """Raise ``ValueError`` unless this is a proper colouring of ``g``."""
        union = 0
        for c in self.classes:
            if union & c:
                raise ValueError("colour classes overlap")
            if not is_independent(g, c):
                raise ValueError(f"class {format_subset(c)} is not independent")
            union |= c
        if union != g.vertex_mask:
            raise ValueError("colour classes do not cover every vertex")

    def color_of(self) -> dict[int, int]:
        """Vertex -> colour index (1-based, in class order)."""
        return {v: i for i, c in enumerate(self.classes, start=1) for v in to_labels(c)}

    def __str__(self) -> str:
        return "\n".join(format_subset(c) for c in self.classes)


def add_up_sets(n: int, k: int, mu: int) -> list[PartitionSpec]:
    """All ways to write ``n`` as ``k`` parts in ``[1, mu]``, non-increasing, lexicographically descending."""
    out: list[PartitionSpec] = []

    def rec(rest: int, parts: int, cap: int, prefix: tuple[int, ...]):
        if parts == 0:
            if rest == 0:
                out.append(prefix)
            return
        # remaining parts each need at least 1 and at most `top`
        top = min(cap, rest - (parts - 1))
        for a in range(top, 0, -1):
            if a * parts < rest:
                break
            rec(rest - a, parts - 1, a, prefix + (a,))

    if n >= 1 and k >= 1 and mu >= 1:
        rec(n, k, mu, ())
    return out


def iter_colorings_for_spec(family: IndependentFamily, spec: PartitionSpec) -> Iterator[Coloring]:
    """Depth-first search for pairwise disjoint sets with the sizes in ``spec``.

    Position ``i`` draws from the bucket of size ``spec[i]``, skipping sets that
    meet the ones already chosen; when a bucket is exhausted the search resumes
    in the previous bucket after its current choice. For equal consecutive
    sizes the choice index must increase, so each partition is produced once.
    Disjointness plus ``sum(spec) == n`` makes every hit a partition.
    """
    if sum(spec) != family.n:
        return
    k = len(spec)
    lists = [family.bucket(a) for a in spec]
    if any(not lst for lst in lists):
        return
    chosen = [0] * k
    pos = [0] * k  # next index to try at each depth
    used = [0] * (k + 1)  # union of the sets chosen at depths < i
    i = 0
    while i >= 0:
        lst = lists[i]
        j = pos[i]
        taken = used[i]
        while j < len(lst) and lst[j] & taken:
            j += 1
        if j == len(lst):
            i -= 1
            continue
        pos[i] = j + 1
        chosen[i] = lst[j]
        used[i + 1] = taken | lst[j]
        if i == k - 1:
            yield Coloring.of(chosen)
            continue
        i += 1
        pos[i] = pos[i - 1] if spec[i] == spec[i - 1] else 0


def find_coloring_for_spec(family: IndependentFamily, spec: PartitionSpec) -> Coloring | None:
    return next(iter_colorings_for_spec(family, spec), None)


def chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, Coloring]:
    """Smallest k with a k-colouring, and the first colouring found for it."""
    _, stats = find_mis(g, node_budget)
    mu = stats.alpha
    family = all_independent_sets(g, node_budget)
    k = -(-g.n // mu)
    while k <= g.n:
        for spec in add_up_sets(g.n, k, mu):
            found = find_coloring_for_spec(family, spec)
            if found is not None:
                return k, found
        k += 1
    raise AssertionError("the singletons always give an n-colouring")


def all_colorings(
    g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET, family: IndependentFamily | None = None
) -> list[Coloring]:
    """Every partition of ``g`` into exactly ``k`` independent classes."""
    if family is None:
        family = all_independent_sets(g, node_budget)
    out = []
    for spec in add_up_sets(g.n, k, family.mu):
        out += iter_colorings_for_spec(family, spec)
    return out
