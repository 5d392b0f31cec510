"""Split counts on random graphs and Möbius ladders against the fitted curves.

Run: python demos/05_split_count_sweep.py   (about half a minute)
The same data is available as CSV from ``sbetree bench``.
"""

import numpy as np

from sbetree.bench import SweepConfig, run_sweep, summarize
from sbetree.closed_forms import moebius_split_prediction, random_split_prediction

rows = run_sweep(SweepConfig(n=24, m_from=24, m_to=276, runs=5, orderings=("none", "descending", "ascending")))
summary = summarize(rows)
print("mean delta on G(24, m), every 36th m:")
for n, m, ordering, runs, _, mean_delta, max_delta in summary:
    if ordering == "none" and (m - 24) % 36 == 0:
        row = {s[2]: float(s[5]) for s in summary if s[1] == m}
        print(f"  m={m:3d}  " + "  ".join(f"{o}={row[o]:7.1f}" for o in ("descending", "none", "ascending")))

print(f"fitted random-graph maximum at n=24: {random_split_prediction(24):.0f}")

ladders = run_sweep(SweepConfig(family="moebius", n_from=8, n_to=28, n_step=2))
print("\nMöbius ladders: measured delta vs fitted curve")
for n, m, ordering, run, seed, alpha, delta, depth, status in ladders:
    print(f"  n={n:2d} delta={delta:5d} fitted={moebius_split_prediction(n):8.1f}")
ns = [r[0] for r in ladders if r[0] % 4 == 0 and r[0] >= 12]
ds = [r[6] for r in ladders if r[0] % 4 == 0 and r[0] >= 12]
print(f"slope of log2(delta+2) for n divisible by 4: {np.polyfit(ns, np.log2(np.add(ds, 2)), 1)[0]:.4f}")
