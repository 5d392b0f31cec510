"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import math
import statistics
import time

import numpy as np

from sbetree.bench import SweepConfig, run_sweep, to_csv
from sbetree.closed_forms import MOEBIUS_SLOPE, count_sbe_trees_complete, path_width_profile
from sbetree.coloring import all_colorings, chromatic_number
from sbetree.engine import build_sbe_tree, build_usbe_layers
from sbetree.enumerate import close_downward, foliage
from sbetree.graph import generate, reorder_by_degree
from sbetree.mis import find_mis_with_ordering
from sbetree.oracle import (
    brute_all_independent_sets,
    brute_chromatic,
    brute_maximal_independent_sets,
    brute_mis,
    count_sbe_trees,
)

from conftest import TABLE12_ASCENDING, TABLE12_DESCENDING, seeded_graphs

PEAK_TARGET = 1192
PEAK_TOLERANCE = 0.25
ORDERING_RATIO_MAX = 0.75
MOEBIUS_SLOPE_TOL = 0.03


def check(report, name, ok, detail):
    report(name, ok, detail)
    assert ok, detail


def test_c01_complete_sizes(report):
    t0 = time.perf_counter()
    sbe = {n: build_sbe_tree(generate("complete", n))[1] for n in range(2, 13)}
    usbe = {n: build_usbe_layers(generate("complete", n)).total_size for n in range(2, 49)}
    elapsed = time.perf_counter() - t0
    ok = all(sbe[n] == 2**n - 1 for n in sbe) and all(usbe[n] == math.comb(n + 1, 2) for n in usbe)
    ok = ok and usbe[48] == 1176 and elapsed < 1.0
    check(report, "C1 complete-graph sizes", ok, f"K48 USBE={usbe[48]}, elapsed {elapsed:.2f}s")


def test_c02_tree_count(report):
    k6 = count_sbe_trees_complete(6)
    k4 = count_sbe_trees(generate("complete", 4))
    ok = k6 == 12_754_584_000 and k4 == 54 == count_sbe_trees_complete(4)
    check(report, "C2 SBE-tree count", ok, f"T(6)={k6}, enumerated K4 trees={k4}")


def test_c03_path_analytics(report):
    t0 = time.perf_counter()
    mismatches = [n for n in range(0, 21) if n and list(path_width_profile(n).widths) != build_usbe_layers(generate("path", n)).layer_widths]
    top_full = all(
        path_width_profile(n).widths[l] == 2**l for n in range(0, 49) for l in range(n // 2 + 1)
    )
    total48 = path_width_profile(48).total
    elapsed = time.perf_counter() - t0
    ok = not mismatches and top_full and total48 == 15_557_484_097 and elapsed < 1.0
    check(report, "C3 path analytics", ok, f"mismatches={mismatches}, total(48)={total48}, elapsed {elapsed:.2f}s")


def test_c04_path_trees_have_no_duplicates(report):
    bad = []
    for n in range(1, 19):
        g = generate("path", n)
        tree, size = build_sbe_tree(g)
        if tree.duplicate_count() or size != build_usbe_layers(g).total_size:
            bad.append(n)
    check(report, "C4 no duplicates in path trees", not bad, f"n=1..18, failing n={bad}")


def test_c05_leaves_cover_independent_sets(report):
    failures = 0
    for g in seeded_graphs(100, 1, 12, base=5):
        leaves = foliage(g).as_set()
        covered = all(any(x & y == x for y in leaves) for x in brute_all_independent_sets(g))
        maximal = brute_maximal_independent_sets(g) <= leaves
        failures += not (covered and maximal)
    check(report, "C5 leaves cover independent sets", failures == 0, f"100 graphs n<=12, failures={failures}")


def test_c06_mis_correctness(report):
    failures = 0
    for g in seeded_graphs(200, 1, 16, base=6):
        alpha, best = brute_mis(g)
        for ordering in ("none", "descending", "ascending"):
            sets, stats = find_mis_with_ordering(g, ordering)
            if stats.alpha != alpha or any(s.bit_count() != alpha for s in sets):
                failures += 1
            elif g.n <= 12 and sets != sorted(best):
                failures += 1
    check(report, "C6 MIS correctness", failures == 0, f"200 graphs x 3 orderings, failures={failures}")


def _mean_delta(n, m, runs, ordering, base_seed=0):
    rows = run_sweep(SweepConfig(n=n, m_from=m, m_to=m, runs=runs, orderings=(ordering,), base_seed=base_seed))
    assert all(r[8] == "ok" for r in rows)
    return statistics.mean(r[6] for r in rows)


def test_c07a_peak_split_level(report):
    none = _mean_delta(24, 83, 300, "none")
    desc = _mean_delta(24, 83, 300, "descending")
    rel = none / PEAK_TARGET - 1
    ok = abs(rel) <= PEAK_TOLERANCE
    detail = (
        f"mean delta(24,83) ordering none = {none:.1f} ({rel:+.1%} vs {PEAK_TARGET}); "
        f"descending = {desc:.1f} ({desc / PEAK_TARGET - 1:+.1%})"
    )
    check(report, "C7a mean splits at (24,83)", ok, detail)


def test_c07b_ordering_effect(report):
    means = {o: _mean_delta(24, 72, 100, o, base_seed=1) for o in ("descending", "none", "ascending")}
    ratio = means["descending"] / means["none"]
    ok = means["descending"] < means["none"] < means["ascending"] and ratio < ORDERING_RATIO_MAX
    detail = ", ".join(f"{o}={v:.1f}" for o, v in means.items()) + f"; descending/none = {ratio:.3f}"
    check(report, "C7b ordering effect at (24,72)", ok, detail)


def _slope(ns, deltas):
    return float(np.polyfit(ns, np.log2(np.asarray(deltas, dtype=float) + 2), 1)[0])


def test_c08_moebius_slope(report):
    rows = run_sweep(SweepConfig(family="moebius", n_from=12, n_to=28, n_step=2))
    delta = {r[0]: r[6] for r in rows}
    classes = {0: [12, 16, 20, 24, 28], 2: [14, 18, 22, 26]}
    slopes = {c: _slope(ns, [delta[n] for n in ns]) for c, ns in classes.items()}
    ok = all(abs(s - MOEBIUS_SLOPE) <= MOEBIUS_SLOPE_TOL for s in slopes.values())
    detail = ", ".join(f"n%4=={c}: slope {s:.4f}" for c, s in slopes.items()) + f" (target {MOEBIUS_SLOPE})"
    check(report, "C8 Moebius slope", ok, detail)


def test_c09_enumeration_closure(report):
    failures = 0
    for g in seeded_graphs(100, 1, 14, base=9):
        if close_downward(foliage(g)).as_set() != brute_all_independent_sets(g).as_set():
            failures += 1
    check(report, "C9 enumeration closure", failures == 0, f"100 graphs n<=14, failures={failures}")


def test_c10_coloring(report):
    failures = []
    for family, n, chi in (("complete", 4, 4), ("path", 5, 2), ("cycle", 5, 3)):
        if chromatic_number(generate(family, n))[0] != chi:
            failures.append(f"{family}{n}")
    compared = 0
    for i, g in enumerate(seeded_graphs(100, 1, 10, base=10)):
        chi, witness = chromatic_number(g)
        witness.validate(g)
        oracle_chi, partitions = brute_chromatic(g)
        if chi != oracle_chi:
            failures.append(f"graph {i} chi")
        if g.n <= 8:
            compared += 1
            found = all_colorings(g, chi)
            if len(found) != len(set(found)) or {frozenset(c.classes) for c in found} != partitions:
                failures.append(f"graph {i} colorings")
    check(report, "C10 coloring", not failures, f"100 graphs n<=10 ({compared} with n<=8 fully compared), failures={failures}")


def test_c11a_descending_mapping(report, table12):
    _, mapping = reorder_by_degree(table12, "descending")
    diff = [(p, q) for p, q in zip(mapping.pairs(), TABLE12_DESCENDING) if p != q]
    check(report, "C11a descending mapping table", not diff, f"mismatched rows (ours, table): {diff}")


def test_c11b_ascending_mapping(report, table12):
    _, mapping = reorder_by_degree(table12, "ascending")
    diff = [(p, q) for p, q in zip(mapping.pairs(), TABLE12_ASCENDING) if p != q]
    check(report, "C11b ascending mapping table", not diff, f"mismatched rows (ours, table): {diff}")


def test_c12_sweep_determinism(report):
    config = SweepConfig(n=16, m_from=20, m_to=24, runs=3, orderings=("none", "descending", "ascending"), base_seed=12)
    first, second = to_csv(run_sweep(config)), to_csv(run_sweep(config))
    check(report, "C12 sweep determinism", first == second, f"{len(first)} bytes, identical={first == second}")
