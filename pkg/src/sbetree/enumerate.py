"""All independent sets of a graph from the leaves of its uniquified tree."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .engine import DEFAULT_NODE_BUDGET, iter_usbe_layers
from .graph import Graph, VertexSubset, format_subset, to_labels

__all__ = ["IndependentFamily", "foliage", "close_downward", "iter_closure", "all_independent_sets"]


@dataclass
class IndependentFamily:
    """Independent sets bucketed by cardinality.

    ``buckets[c]`` lists the cardinality-``c`` members without repeats, in
    insertion order. ``n`` is the order of the graph the sets belong to.
    """

    n: int
    buckets: dict[int, list[VertexSubset]] = field(default_factory=dict)
    _index: set[VertexSubset] = field(default_factory=set, repr=False, compare=False)

    def __post_init__(self):
        self._index.update(s for b in self.buckets.values() for s in b)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[VertexSubset]) -> IndependentFamily:
        fam = cls(n)
        for s in sets:
            fam.add(s)
        return fam

    def add(self, s: VertexSubset) -> bool:
        if s in self._index:
            return False
        self._index.add(s)
        self.buckets.setdefault(s.bit_count(), []).append(s)
        return True

    @property
    def mu(self) -> int:
        return max((c for c, b in self.buckets.items() if b), default=0)

    def bucket(self, c: int) -> list[VertexSubset]:
        return self.buckets.get(c, [])

    def __iter__(self) -> Iterator[VertexSubset]:
        for c in sorted(self.buckets):
            yield from self.buckets[c]

    def __len__(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def __contains__(self, s: VertexSubset) -> bool:
        return s in self._index

    def as_set(self) -> frozenset[VertexSubset]:
        return frozenset(self)

    def dump(self) -> str:
        """One set per line, largest cardinality first, then by sorted labels."""
        lines = []
        for c in sorted(self.buckets, reverse=True):
            lines += [format_subset(s) for s in sorted(self.buckets[c], key=to_labels)]
        return "\n".join(lines) + "\n" if lines else ""


def foliage(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> IndependentFamily:
    """Leaves of the fully expanded uniquified tree; every maximal independent set is one."""
    leaves = []
    for _, _, lv in iter_usbe_layers(g, node_budget):
        leaves += lv
    return IndependentFamily.from_sets(g.n, leaves)


def iter_closure(f: IndependentFamily) -> Iterator[list[VertexSubset]]:
    """Yield the successive frontiers F(1), F(2), ... of the downward closure.

    Each frontier holds the one-smaller subsets of the previous frontier's
    members that were not seen before. Iteration stops at the first empty one.
    """
    seen = set(f)
    frontier = list(f)
    while True:
        nxt = []
        for y in frontier:
            if y.bit_count() < 2:
                continue
            rest = y
            while rest:
                low = rest & -rest
                x = y ^ low
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
                rest ^= low
        if not nxt:
            return
        yield nxt
        frontier = nxt


def close_downward(f: IndependentFamily) -> IndependentFamily:
    """Every nonempty subset of a member of ``f``; from the foliage this is every independent set."""
    out = IndependentFamily.from_sets(f.n, f)
    for frontier in iter_closure(f):
        for x in frontier:
            out.add(x)
    return out


def all_independent_sets(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> IndependentFamily:
    return close_downward(foliage(g, node_budget))
