import math

import numpy as np
import pytest
from hypothesis import strategies as st

from sbetree.bench import mix_seed
from sbetree.graph import Graph, generate

# Adjacency table of the 12-vertex example graph, row by row.
TABLE12 = {
    1: [2, 3, 4, 5, 6, 7, 8],
    2: [1, 4, 5, 9, 11],
    3: [1, 8, 9, 11],
    4: [1, 2, 6, 8, 9, 11],
    5: [1, 2, 7, 8, 11, 12],
    6: [1, 4, 7, 10, 12],
    7: [1, 5, 6, 8],
    8: [1, 3, 4, 5, 7, 9, 10, 12],
    9: [2, 3, 4, 8, 11],
    10: [6, 8, 11, 12],
    11: [2, 3, 4, 5, 9, 10, 12],
    12: [5, 6, 8, 10, 11],
}

# (old, new) rows of the two mapping tables
TABLE12_DESCENDING = [(8, 1), (1, 2), (11, 3), (4, 4), (5, 5), (2, 6), (6, 7), (9, 8), (12, 9), (3, 10), (7, 11), (10, 12)]
TABLE12_ASCENDING = [(3, 1), (7, 2), (10, 3), (2, 4), (6, 5), (9, 6), (12, 7), (4, 8), (5, 9), (11, 10), (1, 11), (8, 12)]


def table12_edge_list_text() -> str:
    edges = sorted({(min(u, v), max(u, v)) for u, row in TABLE12.items() for v in row})
    return "\n".join([f"12 {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


@pytest.fixture
def table12() -> Graph:
    edges = {(min(u, v), max(u, v)) for u, row in TABLE12.items() for v in row}
    return Graph.from_edges(12, edges)


def seeded_graphs(count: int, n_min: int, n_max: int, base: int = 0):
    """Reproducible gnm graphs with n and m drawn uniformly."""
    rng = np.random.default_rng(base)
    out = []
    for i in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        m = int(rng.integers(0, math.comb(n, 2) + 1))
        out.append(generate("gnm", n, m=m, seed=mix_seed(base, m, i)))
    return out


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# acceptance report ---------------------------------------------------------

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def record(criterion: str, ok: bool, detail: str = ""):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
