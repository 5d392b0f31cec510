"""Maximum independent sets by layer-by-layer search of the uniquified tree."""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import DEFAULT_NODE_BUDGET, BudgetExceeded, Layer, expand_layer, splitting_edge
from .graph import Graph, VertexSubset, reorder_by_degree

__all__ = ["SearchStats", "find_mis", "find_mis_with_ordering", "ORDERINGS"]

ORDERINGS = ("none", "descending", "ascending")


@dataclass
class SearchStats:
    """Work done by one search.

    ``delta`` counts split operations, ``layer_widths`` the sizes of every
    layer built (the leaf-bearing one included), ``mis_depth`` the depth of
    that layer and ``alpha`` the independence number.
    """

    delta: int = 0
    layer_widths: list[int] = field(default_factory=list)
    mis_depth: int | None = None
    alpha: int | None = None

    @property
    def tree_size(self) -> int:
        return sum(self.layer_widths)


def find_mis(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[list[VertexSubset], SearchStats]:
    """Every maximum independent set of ``g``, with search statistics.

    Layers are built from the root down; the first layer holding an
    independent node holds exactly the maximum independent sets, since any
    shallower leaf would be a larger independent set.
    """
    stats = SearchStats()
    layer = Layer.root(g)
    total = 1
    while True:
        stats.layer_widths.append(len(layer))
        found = [s for s in layer.nodes if splitting_edge(g, s) is None]
        if found:
            stats.mis_depth = layer.depth
            stats.alpha = g.n - layer.depth
            return found, stats
        layer, splits, _ = expand_layer(g, layer)
        stats.delta += splits
        total += len(layer)
        if total > node_budget:
            raise BudgetExceeded(node_budget, layer.depth, total, stats)


def find_mis_with_ordering(
    g: Graph, ordering: str = "none", node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[list[VertexSubset], SearchStats]:
    """Run :func:`find_mis` on a degree-relabelled copy of ``g``.

    Sets come back in the original labels, sorted; ``stats`` describe the
    relabelled run.
    """
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}, got {ordering!r}")
    if ordering == "none":
        sets, stats = find_mis(g, node_budget)
        return sorted(sets), stats
    h, mapping = reorder_by_degree(g, ordering)
    sets, stats = find_mis(h, node_budget)
    return sorted(mapping.unmap_subset(s) for s in sets), stats
