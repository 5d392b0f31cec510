"""Layer-by-layer maximum independent set search and the effect of degree ordering.

Run: python demos/02_maximum_independent_sets.py
"""

import statistics

from sbetree import find_mis_with_ordering, format_subset, generate, reorder_by_degree

g = generate("gnm", 20, m=45, seed=2024)
print(f"random graph n={g.n} m={g.m}")
for ordering in ("none", "descending", "ascending"):
    sets, stats = find_mis_with_ordering(g, ordering)
    print(
        f"  {ordering:10} alpha={stats.alpha} delta={stats.delta:5d} "
        f"widths={stats.layer_widths} first set={format_subset(sets[0])}"
    )

# Relabelling by descending degree puts the dense part first, so it is split
# away early and the layers stay narrow.
h, mapping = reorder_by_degree(g, "descending")
print("old->new:", " ".join(f"{old}->{new}" for old, new in mapping.pairs()))

deltas = {o: [] for o in ("none", "descending", "ascending")}
for seed in range(40):
    r = generate("gnm", 20, m=60, seed=seed)
    for o in deltas:
        deltas[o].append(find_mis_with_ordering(r, o)[1].delta)
print("mean splits over 40 graphs (n=20, m=60):", {o: round(statistics.mean(v)) for o, v in deltas.items()})
