"""Seeded experiment sweeps producing split-count CSV data."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .engine import DEFAULT_NODE_BUDGET, BudgetExceeded
from .graph import Graph, generate
from .mis import ORDERINGS, find_mis_with_ordering

__all__ = ["SweepConfig", "SWEEP_HEADER", "SUMMARY_HEADER", "mix_seed", "run_sweep", "summarize", "to_csv"]

SWEEP_HEADER = ("n", "m", "ordering", "run", "seed", "alpha", "delta", "mis_depth", "status")
SUMMARY_HEADER = ("n", "m", "ordering", "runs", "mean_alpha", "mean_delta", "max_delta")


def mix_seed(base: int, m: int, run: int) -> int:
    """64-bit seed for one sweep cell.

    NumPy's ``SeedSequence`` hashes the entropy words ``[base, m, run]``; the
    first 64-bit word of its output is the seed. Any row can be regenerated
    from its own (base, m, run).
    """
    return int(np.random.SeedSequence([base, m, run]).generate_state(1, dtype=np.uint64)[0])


@dataclass
class SweepConfig:
    """One sweep.

    ``family="gnm"`` runs ``runs`` random graphs per ``m`` in
    ``m_from..m_to``. ``family="moebius"`` runs one ladder per even ``n`` in
    ``n_from..n_to`` (step ``n_step``) and ignores the ``m`` range and seeds.
    """

    n: int = 24
    m_from: int = 24
    m_to: int = 24
    runs: int = 1
    orderings: tuple[str, ...] = ("none",)
    base_seed: int = 0
    node_budget: int = DEFAULT_NODE_BUDGET
    family: str = "gnm"
    n_from: int | None = None
    n_to: int | None = None
    n_step: int = 2
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        bad = [o for o in self.orderings if o not in ORDERINGS]
        if bad or not self.orderings:
            raise ValueError(f"orderings must be a nonempty subset of {ORDERINGS}, got {self.orderings}")
        if self.family == "gnm":
            top = math.comb(self.n, 2)
            if not 0 <= self.m_from <= self.m_to <= top:
                raise ValueError(f"need 0 <= m_from <= m_to <= {top}")
        elif self.family == "moebius":
            if self.n_from is None or self.n_to is None or self.n_from > self.n_to:
                raise ValueError("moebius sweeps need n_from <= n_to")
        else:
            raise ValueError(f"sweep family must be 'gnm' or 'moebius', got {self.family!r}")

    def cells(self):
        """``(n, m, run, seed, graph factory)`` in canonical order."""
        if self.family == "moebius":
            for n in range(self.n_from, self.n_to + 1, self.n_step):
                yield n, 3 * n // 2, 0, 0, lambda n=n: generate("moebius", n)
            return
        for m in range(self.m_from, self.m_to + 1):
            for run in range(self.runs):
                seed = mix_seed(self.base_seed, m, run)
                yield self.n, m, run, seed, lambda m=m, seed=seed: generate("gnm", self.n, m=m, seed=seed)


def _run_one(g: Graph, ordering: str, budget: int) -> tuple:
    try:
        _, stats = find_mis_with_ordering(g, ordering, budget)
        return stats.alpha, stats.delta, stats.mis_depth, "ok"
    except BudgetExceeded as exc:
        return "", exc.stats.delta if exc.stats else "", "", "budget"


def run_sweep(config: SweepConfig) -> list[tuple]:
    """Rows matching ``SWEEP_HEADER``, ordered by (m or n, run, ordering)."""
    config.validate()
    rows = []
    for n, m, run, seed, make in config.cells():
        g = make()
        for ordering in config.orderings:
            rows.append((n, m, ordering, run, seed, *_run_one(g, ordering, config.node_budget)))
    return rows


def summarize(rows: list[tuple]) -> list[tuple]:
    """Per-(n, m, ordering) means over successful runs, matching ``SUMMARY_HEADER``."""
    groups: dict[tuple, list[tuple]] = {}
    for row in rows:
        if row[8] == "ok":
            groups.setdefault((row[0], row[1], row[2]), []).append(row)
    out = []
    for (n, m, ordering), rs in groups.items():
        deltas = [r[6] for r in rs]
        out.append(
            (
                n,
                m,
                ordering,
                len(rs),
                f"{sum(r[5] for r in rs) / len(rs):.4f}",
                f"{sum(deltas) / len(deltas):.4f}",
                max(deltas),
            )
        )
    return out


def to_csv(rows: list[tuple], header=SWEEP_HEADER) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
