"""Explicit and uniquified split-by-edges trees of small graphs.

Run: python demos/01_split_by_edges_trees.py
"""

from sbetree import build_sbe_tree, build_usbe_layers, format_subset, generate
from sbetree.engine import dump_layers, reconstruct_parents

# The ordered tree of the path 1-2-3-4-5: each node is split by its smallest
# internal edge, the left child drops the smaller endpoint.
g = generate("path", 5)
tree, size = build_sbe_tree(g)
print(f"path(5): {size} nodes, layer widths {tree.layer_widths()}")
for i in range(tree.size):
    if not tree.is_leaf(i):
        left, right = tree.children[i]
        print(
            f"  {format_subset(tree.nodes[i]):13} --{tree.edges[i]}--> "
            f"{format_subset(tree.nodes[left])} | {format_subset(tree.nodes[right])}"
        )
print("  leaves:", ", ".join(format_subset(s) for s in tree.leaves()))

# A different edge priority gives a different tree of the same path.
_, other = build_sbe_tree(g, edge_order=[(2, 3), (3, 4), (1, 2), (4, 5)])
print(f"same path, edges tried as 23,34,12,45: {other} nodes")

# Complete graphs have huge explicit trees but tiny uniquified ones.
for n in (4, 8, 12):
    k = generate("complete", n)
    print(f"K{n}: SBE size {build_sbe_tree(k)[1]}, USBE size {build_usbe_layers(k).total_size}")

# Layers of the uniquified tree as text, and walking one node back up.
c = generate("cycle", 5)
layers = build_usbe_layers(c).layers
print(dump_layers(layers[:3]), end="")
node = layers[2].nodes[0]
for parent, sibling, edge in reconstruct_parents(c, node):
    print(f"{format_subset(node)} <- parent {format_subset(parent)} via {edge}, sibling {format_subset(sibling)}")
