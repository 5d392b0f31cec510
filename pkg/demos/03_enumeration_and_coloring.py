"""All independent sets from the tree's leaves, then chromatic number and colourings.

Run: python demos/03_enumeration_and_coloring.py
"""

from sbetree import add_up_sets, all_colorings, chromatic_number, close_downward, foliage, format_subset, generate

g = generate("cycle", 7)
leaves = foliage(g)
family = close_downward(leaves)
print(f"C7: {len(leaves)} leaves, {len(family)} nonempty independent sets, largest size {family.mu}")
print(family.dump(), end="")

k, witness = chromatic_number(g)
print(f"chromatic number {k}; one colouring:")
print(witness)

print("size profiles tried for k=3:", add_up_sets(g.n, 3, family.mu))
colorings = all_colorings(g, k)
print(f"{len(colorings)} partitions into {k} independent classes, e.g.")
for c in colorings[:3]:
    print("  " + " ".join(format_subset(cls) for cls in c.classes))
