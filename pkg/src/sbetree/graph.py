"""Undirected simple graphs over bitmask vertex sets.

A vertex set is a plain ``int`` used as a bitset: vertex ``v`` is a member
iff bit ``v`` is set.  Vertices are labelled ``0..n-1`` internally and
``1..n`` in the text file format.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .rng import SplitMix64

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def members(s: VertexSet) -> Iterator[int]:
    """Yield the members of ``s`` in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        total = 0
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"neighbour of {v} out of range")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("n must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, new_label: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``new_label[v]``."""
        return Graph.from_edges(self.n, ((new_label[u], new_label[v]) for u, v in self.edges()))

    def digest(self) -> str:
        """Short content hash, stable across runs and platforms."""
        return hashlib.sha256(to_text(self).encode("ascii")).hexdigest()[:16]


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# --- random generation -----------------------------------------------------


@lru_cache(maxsize=None)
def _pair_table(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform G(n, m) sample.

    The ``m`` edges are the first ``m`` slots of a partial Fisher-Yates
    shuffle of the lexicographically indexed ``n(n-1)/2`` vertex pairs,
    driven by SplitMix64 seeded with ``seed``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m must be in [0, {total}] for n={n}, got {m}")
    rng = SplitMix64(seed)
    swapped: dict[int, int] = {}
    chosen = []
    for i in range(m):
        j = i + rng.below(total - i)
        chosen.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    pairs = _pair_table(n)
    return Graph.from_edges(n, (pairs[k] for k in chosen))


# --- orderings -------------------------------------------------------------


class OrderingMode(enum.Enum):
    ARBITRARY = "arbitrary"
    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True)
class Permutation:
    """Vertex order; ``rank`` is the inverse of ``order``."""

    order: tuple[int, ...]
    rank: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        rank = [-1] * len(self.order)
        for pos, v in enumerate(self.order):
            if not 0 <= v < len(self.order) or rank[v] != -1:
                raise ValueError(f"not a permutation: {self.order}")
            rank[v] = pos
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.order))


def degree_ordering(g: Graph, mode: OrderingMode) -> Permutation:
    if mode is OrderingMode.ARBITRARY:
        return Permutation.identity(g.n)
    sign = 1 if mode is OrderingMode.ASCENDING else -1
    return Permutation(tuple(sorted(range(g.n), key=lambda v: (sign * g.degree(v), v))))


# --- induced-subgraph queries ----------------------------------------------


def is_independent(g: Graph, s: VertexSet) -> bool:
    adj = g.adj
    rest = s
    while rest:
        low = rest & -rest
        if adj[low.bit_length() - 1] & s:
            return False
        rest ^= low
    return True


def induced_degree(g: Graph, s: VertexSet, v: int) -> int:
    if not s >> v & 1:
        raise ValueError(f"vertex {v} is not in the set")
    return (g.adj[v] & s).bit_count()


def induced_edge_count(g: Graph, s: VertexSet) -> int:
    adj = g.adj
    total = 0
    rest = s
    while rest:
        low = rest & -rest
        total += (adj[low.bit_length() - 1] & s).bit_count()
        rest ^= low
    return total // 2


# --- text format -----------------------------------------------------------


def to_text(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


class GraphFormatError(ValueError):
    pass


def from_text(text: str) -> Graph:
    """Parse ``p edge``/``e`` lines; ``c`` comment lines are skipped."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None or len(parts) != 4 or parts[1] != "edge":
                    raise GraphFormatError(f"line {lineno}: bad problem line")
                n, m = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: bad edge line")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n) or u == v:
                    raise GraphFormatError(f"line {lineno}: bad endpoints {u} {v}")
                edges.append((u - 1, v - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing problem line")
    g = Graph.from_edges(n, edges)
    if g.m != m or len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)} ({g.m} distinct)")
    return g


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return from_text(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_text(g))
