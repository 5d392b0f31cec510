"""Simple undirected graphs on vertices 1..n, with I/O, generators and relabelling.

Vertex subsets are plain ``int`` bitmasks throughout the package: vertex ``v``
is bit ``v - 1``. :func:`from_labels` and :func:`to_labels` convert.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Graph",
    "GraphFormatError",
    "VertexMapping",
    "VertexSubset",
    "FAMILIES",
    "from_labels",
    "to_labels",
    "format_subset",
    "parse_graph",
    "read_graph",
    "write_graph",
    "generate",
    "reorder_by_degree",
    "is_independent",
    "make_rng",
]

VertexSubset = int
Edge = tuple[int, int]

FAMILIES = ("path", "cycle", "complete", "edgeless", "moebius", "gnm", "regular", "apollonian")


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def from_labels(vertices: Iterable[int]) -> VertexSubset:
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels start at 1, got {v}")
        mask |= 1 << (v - 1)
    return mask


def to_labels(mask: VertexSubset) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def format_subset(mask: VertexSubset) -> str:
    return "{" + ",".join(map(str, to_labels(mask))) + "}"


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph with vertex labels ``1..n``.

    ``edges`` holds normalised pairs ``(u, v)`` with ``u < v`` in ascending
    lexicographic order, which is the order splitting edges are chosen in.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    # bitmask of neighbours of v, indexed by v (slot 0 unused)
    neighbor_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    # bitmask of neighbours of v with larger label
    upper_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        edges = tuple(self.edges)
        for (u, v), (x, y) in zip(edges, edges[1:]):
            if (u, v) >= (x, y):
                raise ValueError(f"edges not strictly increasing at {(u, v)}, {(x, y)}")
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        nbr = [0] * (self.n + 1)
        upper = [0] * (self.n + 1)
        for u, v in edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {(u, v)} is not a normalised pair in 1..{self.n}")
            adj[u].append(v)
            adj[v].append(u)
            nbr[u] |= 1 << (v - 1)
            nbr[v] |= 1 << (u - 1)
            upper[u] |= 1 << (v - 1)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "neighbor_masks", tuple(nbr))
        object.__setattr__(self, "upper_masks", tuple(upper))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from unordered pairs, rejecting loops and repeats."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {(u, v)} out of range 1..{n}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> VertexSubset:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(self.adjacency[v]) for v in range(1, self.n + 1)]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())


@dataclass(frozen=True)
class VertexMapping:
    """A relabelling of ``1..n``; ``forward[old] == new`` (index 0 unused)."""

    forward: tuple[int, ...]
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.forward) - 1
        inv = [0] * (n + 1)
        for old in range(1, n + 1):
            inv[self.forward[old]] = old
        if sorted(self.forward[1:]) != list(range(1, n + 1)):
            raise ValueError("forward is not a permutation of 1..n")
        object.__setattr__(self, "inverse", tuple(inv))

    def map_subset(self, mask: VertexSubset) -> VertexSubset:
        return from_labels(self.forward[v] for v in to_labels(mask))

    def unmap_subset(self, mask: VertexSubset) -> VertexSubset:
        return from_labels(self.inverse[v] for v in to_labels(mask))

    def pairs(self) -> list[tuple[int, int]]:
        """``(old, new)`` pairs in order of the new label, as in a mapping table."""
        return [(self.inverse[new], new) for new in range(1, len(self.forward))]


# ---------------------------------------------------------------------------
# text formats


def parse_graph(text: str) -> Graph:
    """Parse an edge list (``n m`` header then ``u v`` lines) or DIMACS-like text.

    DIMACS input uses ``p edge n m`` and ``e u v`` lines; ``c`` lines are comments.
    Blank lines and lines starting with ``#`` are ignored in both formats.
    """
    n = m = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("second header", lineno)
            if len(tokens) != 4:
                raise GraphFormatError(f"malformed problem line {line!r}", lineno)
            n, m = _ints(tokens[2:], lineno)
            continue
        if tokens[0] == "e":
            tokens = tokens[1:]
        if n is None:
            if len(tokens) != 2:
                raise GraphFormatError(f"expected header 'n m', got {line!r}", lineno)
            n, m = _ints(tokens, lineno)
            if n < 1 or m < 0:
                raise GraphFormatError(f"bad header n={n} m={m}", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected edge 'u v', got {line!r}", lineno)
        u, v = _ints(tokens, lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphFormatError(f"vertex {x} out of range 1..{n}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise GraphFormatError("missing header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, tuple(sorted(edges)))


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Serialise ``g``; :func:`parse_graph` reads the result back unchanged."""
    if fmt == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for a 64-bit seed; all random families draw from this."""
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def generate(family: str, n: int, *, m: int | None = None, d: int | None = None, seed: int = 0) -> Graph:
    """Build a graph of the named family.

    ``gnm`` needs ``m``, ``regular`` needs ``d``; ``gnm``, ``regular`` and
    ``apollonian`` are random and depend only on ``seed``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if family == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    elif family == "complete":
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    elif family == "edgeless":
        edges = []
    elif family == "moebius":
        if n < 4 or n % 2:
            raise ValueError(f"moebius ladder needs even n >= 4, got {n}")
        half = n // 2
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)] + [(i, i + half) for i in range(1, half + 1)]
    elif family == "gnm":
        edges = _gnm_edges(n, m, seed)
    elif family == "regular":
        edges = _regular_edges(n, d, seed)
    else:
        edges = _apollonian_edges(n, seed)
    return Graph.from_edges(n, edges)


def _gnm_edges(n: int, m: int | None, seed: int) -> list[Edge]:
    pairs = n * (n - 1) // 2
    if m is None or not 0 <= m <= pairs:
        raise ValueError(f"gnm needs 0 <= m <= {pairs}, got m={m}")
    rng = make_rng(seed)
    picks = rng.choice(pairs, size=m, replace=False) if m else []
    return [_pair_from_index(int(k), n) for k in picks]


def _pair_from_index(k: int, n: int) -> Edge:
    # row-major enumeration of pairs (u, v), u < v
    u = 1
    row = n - 1
    while k >= row:
        k -= row
        u += 1
        row -= 1
    return (u, u + 1 + k)


def _regular_edges(n: int, d: int | None, seed: int, max_restarts: int = 1000) -> list[Edge]:
    if d is None or not 0 <= d < n or (n * d) % 2:
        raise ValueError(f"regular needs 0 <= d < n and n*d even, got n={n}, d={d}")
    rng = make_rng(seed)
    for _ in range(max_restarts):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            return edges
    raise RuntimeError(f"no {d}-regular graph on {n} vertices after {max_restarts} restarts")


def _try_pairing(n: int, d: int, rng: np.random.Generator) -> list[Edge] | None:
    # Pair stubs one edge at a time, rejecting any pair that would form a loop or
    # a repeated edge; restart from scratch only when no legal pair remains.
    stubs = [v for v in range(1, n + 1) for _ in range(d)]
    edges: set[Edge] = set()
    while stubs:
        for _ in range(50):
            i, j = rng.choice(len(stubs), size=2, replace=False)
            u, v = stubs[i], stubs[j]
            e = (min(u, v), max(u, v))
            if u != v and e not in edges:
                break
        else:
            if not _has_legal_pair(stubs, edges):
                return None
            continue
        edges.add(e)
        for k in sorted((int(i), int(j)), reverse=True):
            stubs[k] = stubs[-1]
            stubs.pop()
    return sorted(edges)


def _has_legal_pair(stubs: list[int], edges: set[Edge]) -> bool:
    live = sorted(set(stubs))
    return any((u, v) not in edges for i, u in enumerate(live) for v in live[i + 1 :])


def _apollonian_edges(n: int, seed: int) -> list[Edge]:
    if n < 3:
        raise ValueError(f"apollonian needs n >= 3, got {n}")
    rng = make_rng(seed)
    edges = [(1, 2), (1, 3), (2, 3)]
    faces = [(1, 2, 3)]
    for v in range(4, n + 1):
        k = int(rng.integers(len(faces)))
        a, b, c = faces[k]
        edges += [(a, v), (b, v), (c, v)]
        faces[k] = (a, b, v)
        faces += [(b, c, v), (a, c, v)]
    return edges


# ---------------------------------------------------------------------------
# relabelling and predicates


def reorder_by_degree(g: Graph, direction: str = "descending") -> tuple[Graph, VertexMapping]:
    """Relabel vertices so labels follow degree order; ties keep the original label order."""
    if direction not in ("descending", "ascending"):
        raise ValueError(f"direction must be 'descending' or 'ascending', got {direction!r}")
    sign = -1 if direction == "descending" else 1
    order = sorted(range(1, g.n + 1), key=lambda v: (sign * g.degree(v), v))
    forward = [0] * (g.n + 1)
    for new, old in enumerate(order, start=1):
        forward[old] = new
    mapping = VertexMapping(tuple(forward))
    relabelled = Graph.from_edges(g.n, ((forward[u], forward[v]) for u, v in g.edges))
    return relabelled, mapping


def is_independent(g: Graph, s: VertexSubset | Iterable[int]) -> bool:
    """True when no edge of ``g`` has both endpoints in ``s`` (mask or labels)."""
    mask = s if isinstance(s, int) else from_labels(s)
    if mask < 0 or mask >> g.n:
        raise ValueError(f"subset {s!r} has members outside 1..{g.n}")
    upper = g.upper_masks
    rest = mask
    while rest:
        low = rest & -rest
        if upper[low.bit_length()] & mask:
            return False
        rest ^= low
    return True
