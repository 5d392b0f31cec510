"""Tree sizes for 48-vertex graphs: closed forms where they exist, measurements otherwise.

Run: python demos/04_size_table.py   (takes a few seconds)
"""

from sbetree import build_usbe_layers, find_mis, generate
from sbetree.closed_forms import path_tree_size, path_width_profile, sbe_size_complete, usbe_size_complete

n = 48
print(f"{'graph':18} {'n':>3} {'m':>5} {'min':>4} {'max':>4} {'alpha':>5} {'|SBE|':>16} {'|USBE|':>12}")
k = generate("complete", n)
alpha = find_mis(k)[1].alpha
print(f"{'K48':18} {n:3} {k.m:5} {k.min_degree:4} {k.max_degree:4} {alpha:5} {sbe_size_complete(n):16} {usbe_size_complete(n):12}")

r = generate("regular", n, d=18, seed=1)
usbe = build_usbe_layers(r)
alpha = find_mis(r)[1].alpha
print(f"{'18-regular seed 1':18} {n:3} {r.m:5} {r.min_degree:4} {r.max_degree:4} {alpha:5} {'-':>16} {usbe.total_size:12}")

p = generate("path", n)
# alpha of a path is ceil(n / 2); the tree itself is too large to build here
print(f"{'path':18} {n:3} {p.m:5} {p.min_degree:4} {p.max_degree:4} {(n + 1) // 2:5} {path_tree_size(n):16} {path_width_profile(n).total:12}")

print("\npath(48) layer widths from the recurrence:")
print(" ".join(map(str, path_width_profile(n).widths)))
