"""Split-by-edges trees: the split operation, explicit trees and deduplicated layers.

A node is split by its smallest internal edge ``(u, v)`` (lexicographic on the
normalised pair) into ``node - u`` (left) and ``node - v`` (right). A node with
no internal edge is an independent set and is a leaf.

Every node at depth ``l`` has exactly ``n - l`` vertices, so two equal subsets
can only meet inside one layer. The uniquified tree therefore deduplicates one
layer at a time.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from sortedcontainers import SortedSet

from .graph import Edge, Graph, VertexSubset, from_labels, to_labels

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BudgetExceeded",
    "Layer",
    "SbeTree",
    "UsbeLayers",
    "splitting_edge",
    "split",
    "build_sbe_tree",
    "expand_layer",
    "build_usbe_layers",
    "iter_usbe_layers",
    "reconstruct_parents",
    "dump_layers",
    "load_layers",
]

DEFAULT_NODE_BUDGET = 2**26


class BudgetExceeded(RuntimeError):
    """The node budget ran out; ``depth`` is the deepest layer reached."""

    def __init__(self, budget: int, depth: int, nodes: int, stats=None):
        self.budget = budget
        self.depth = depth
        self.nodes = nodes
        self.stats = stats
        super().__init__(f"node budget {budget} exceeded at depth {depth} after {nodes} nodes")


def splitting_edge(g: Graph, node: VertexSubset) -> Edge | None:
    """Smallest edge of ``g`` with both ends in ``node``, or ``None`` for a leaf."""
    upper = g.upper_masks
    rest = node
    while rest:
        low = rest & -rest
        u = low.bit_length()
        hits = upper[u] & node
        if hits:
            return u, (hits & -hits).bit_length()
        rest ^= low
    return None


def split(node: VertexSubset, edge: Edge) -> tuple[VertexSubset, VertexSubset]:
    """Return ``(node - u, node - v)`` for ``edge == (u, v)``."""
    u, v = edge
    bu, bv = 1 << (u - 1), 1 << (v - 1)
    if not (node & bu and node & bv):
        raise ValueError(f"edge {edge} does not lie inside the node {to_labels(node)}")
    return node ^ bu, node ^ bv


# ---------------------------------------------------------------------------
# explicit trees


@dataclass
class SbeTree:
    """An explicit SBE-tree stored level by level.

    Node ``i`` holds ``nodes[i]``; internal nodes have ``edges[i]`` and
    ``children[i] == (left, right)``, leaves have ``None`` in both.
    Nodes are numbered in breadth-first order, root first.
    """

    nodes: list[VertexSubset] = field(default_factory=list)
    depths: list[int] = field(default_factory=list)
    edges: list[Edge | None] = field(default_factory=list)
    children: list[tuple[int, int] | None] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def root(self) -> VertexSubset:
        return self.nodes[0]

    def is_leaf(self, i: int) -> bool:
        return self.children[i] is None

    def leaves(self) -> list[VertexSubset]:
        return [s for s, c in zip(self.nodes, self.children) if c is None]

    def layer(self, depth: int) -> list[VertexSubset]:
        return [s for s, d in zip(self.nodes, self.depths) if d == depth]

    def layer_widths(self) -> list[int]:
        widths = [0] * (max(self.depths) + 1)
        for d in self.depths:
            widths[d] += 1
        return widths

    def duplicate_count(self) -> int:
        return self.size - len(set(self.nodes))


def build_sbe_tree(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    edge_order: Iterable[Edge] | None = None,
) -> tuple[SbeTree, int]:
    """Build the full SBE-tree of ``g``, duplicates included.

    By default splitting edges follow the ascending edge order (the ordered
    tree). ``edge_order`` gives an alternative priority over all edges of ``g``;
    the first listed edge inside a node splits it.
    """
    if edge_order is None:
        choose = lambda node: splitting_edge(g, node)  # noqa: E731
    else:
        priority = [(min(e), max(e)) for e in edge_order]
        if sorted(priority) != list(g.edges):
            raise ValueError("edge_order must list every edge of the graph exactly once")
        masks = [(e, from_labels(e)) for e in priority]

        def choose(node):
            for e, em in masks:
                if node & em == em:
                    return e
            return None

    tree = SbeTree()
    tree.nodes.append(g.vertex_mask)
    tree.depths.append(0)
    i = 0
    while i < len(tree.nodes):
        node = tree.nodes[i]
        e = choose(node)
        if e is None:
            tree.edges.append(None)
            tree.children.append(None)
        else:
            if len(tree.nodes) + 2 > node_budget:
                raise BudgetExceeded(node_budget, tree.depths[i] + 1, len(tree.nodes))
            left, right = split(node, e)
            k = len(tree.nodes)
            tree.nodes += [left, right]
            tree.depths += [tree.depths[i] + 1] * 2
            tree.edges.append(e)
            tree.children.append((k, k + 1))
        i += 1
    return tree, tree.size


# ---------------------------------------------------------------------------
# uniquified layers


@dataclass
class Layer:
    """Distinct nodes at one depth.

    ``nodes`` keeps insertion order, which drives the order nodes are split in;
    ``index`` is an ordered search structure over the same subsets for
    duplicate detection.
    """

    depth: int
    nodes: list[VertexSubset] = field(default_factory=list)
    index: SortedSet = field(default_factory=SortedSet)

    @classmethod
    def root(cls, g: Graph) -> Layer:
        layer = cls(0)
        layer.add(g.vertex_mask)
        return layer

    def add(self, node: VertexSubset) -> bool:
        if node in self.index:
            return False
        self.index.add(node)
        self.nodes.append(node)
        return True

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[VertexSubset]:
        return iter(self.nodes)

    def __contains__(self, node: VertexSubset) -> bool:
        return node in self.index


def expand_layer(g: Graph, layer: Layer) -> tuple[Layer, int, list[VertexSubset]]:
    """Split every non-leaf node of ``layer`` once.

    Returns the deduplicated next layer, the number of splits performed and
    the leaves (independent nodes) of ``layer``, which are not split.
    """
    nxt = Layer(layer.depth + 1)
    splits = 0
    leaves = []
    for node in layer.nodes:
        e = splitting_edge(g, node)
        if e is None:
            leaves.append(node)
            continue
        splits += 1
        left, right = split(node, e)
        nxt.add(left)
        nxt.add(right)
    return nxt, splits, leaves


@dataclass
class UsbeLayers:
    layers: list[Layer]
    total_size: int
    layer_widths: list[int]
    total_splits: int
    leaves: list[VertexSubset]


def iter_usbe_layers(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET):
    """Yield ``(layer, splits, leaves)`` for each layer of the uniquified tree."""
    layer = Layer.root(g)
    total = len(layer)
    while len(layer):
        nxt, splits, leaves = expand_layer(g, layer)
        yield layer, splits, leaves
        total += len(nxt)
        if total > node_budget:
            raise BudgetExceeded(node_budget, nxt.depth, total)
        layer = nxt


def build_usbe_layers(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> UsbeLayers:
    """Expand the uniquified tree of ``g`` until no node can be split."""
    layers = []
    splits = 0
    leaves = []
    for layer, s, lv in iter_usbe_layers(g, node_budget):
        layers.append(layer)
        splits += s
        leaves += lv
    widths = [len(layer) for layer in layers]
    return UsbeLayers(layers, sum(widths), widths, splits, leaves)


def reconstruct_parents(g: Graph, node: VertexSubset) -> list[tuple[VertexSubset, VertexSubset, Edge]]:
    """All ``(parent, sibling, edge)`` such that splitting ``parent`` yields ``node``.

    Edges are scanned in descending order. An edge with one end ``u`` inside
    ``node`` and the other ``v`` outside proposes the parent ``node + v``; it is
    kept only when that edge really is the parent's splitting edge.
    """
    out = []
    for e in reversed(g.edges):
        a, b = e
        ina, inb = node >> (a - 1) & 1, node >> (b - 1) & 1
        if ina == inb:
            continue
        missing, present = (b, a) if ina else (a, b)
        parent = node | 1 << (missing - 1)
        if splitting_edge(g, parent) != e:
            continue
        out.append((parent, parent & ~(1 << (present - 1)), e))
    return out


# ---------------------------------------------------------------------------
# text dump


def dump_layers(layers: Iterable[Layer | Iterable[VertexSubset]]) -> str:
    """One ``# layer l`` header per layer, then one subset per line, vertices ascending."""
    lines = []
    for depth, layer in enumerate(layers):
        lines.append(f"# layer {depth}")
        nodes = layer.nodes if isinstance(layer, Layer) else layer
        lines += [" ".join(map(str, to_labels(s))) for s in nodes]
    return "\n".join(lines) + "\n"


def load_layers(text: str) -> list[Layer]:
    layers: list[Layer] = []
    for line in text.splitlines():
        if line.startswith("# layer"):
            layers.append(Layer(int(line.split()[2])))
        elif layers:
            layers[-1].add(from_labels(int(t) for t in line.split()))
        elif line.strip():
            raise ValueError("subset line before first layer header")
    return layers
