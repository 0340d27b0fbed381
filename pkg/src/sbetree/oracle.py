"""Ground-truth independence numbers, built without any tree machinery.

Two unrelated routes are provided: branch-and-bound for the sizes used in
experiments, and plain subset enumeration as a small-n cross-check.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, VertexSet
from .sbe import CapacityError

ENUMERATION_CAP = 20
MAXIMAL_CAP = 16


@dataclass(frozen=True)
class OracleResult:
    alpha: int
    witness: VertexSet
    node_budget_used: int


def canonical(sets) -> list[VertexSet]:
    """Sort by cardinality, then by bit pattern."""
    return sorted(set(sets), key=lambda s: (s.bit_count(), s))


def alpha_exact(g: Graph, method: str = "bnb") -> OracleResult:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if method == "bnb":
        return _branch_and_bound(g)
    if method == "enumerate":
        best, sets, visited = _enumerate(g)
        return OracleResult(best, sets[0], visited)
    raise ValueError(f"unknown method {method!r}")


def maximum_sets_bruteforce(g: Graph) -> list[VertexSet]:
    """All maximum independent sets, by checking every subset."""
    return canonical(_enumerate(g)[1])


def _enumerate(g: Graph) -> tuple[int, list[VertexSet], int]:
    n = g.n
    if n > ENUMERATION_CAP:
        raise CapacityError(f"subset enumeration is limited to n <= {ENUMERATION_CAP} (got n={n})")
    adj = g.adj
    ok = bytearray(1 << n)
    ok[0] = 1
    best = 0
    sets = [0]
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if ok[rest] and not adj[low.bit_length() - 1] & rest:
            ok[mask] = 1
            size = mask.bit_count()
            if size > best:
                best, sets = size, [mask]
            elif size == best:
                sets.append(mask)
    return best, sets, 1 << n


def _clique_cover_bound(adj, p: VertexSet) -> int:
    """Number of cliques in a greedy clique partition of ``p``; bounds alpha."""
    cover = 0
    rest = p
    while rest:
        low = rest & -rest
        rest ^= low
        cand = adj[low.bit_length() - 1] & rest
        while cand:
            w = cand & -cand
            rest ^= w
            cand &= adj[w.bit_length() - 1]
        cover += 1
    return cover


def _branch_and_bound(g: Graph) -> OracleResult:
    adj = g.adj
    best_size = 0
    best_set = 0
    nodes = 0

    def search(p: VertexSet, chosen: VertexSet, size: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        # vertices of degree <= 1 belong to some maximum set of what remains
        changed = True
        while changed:
            changed = False
            rest = p
            while rest:
                low = rest & -rest
                rest ^= low
                nb = adj[low.bit_length() - 1] & p
                if nb & (nb - 1) == 0:
                    chosen |= low
                    size += 1
                    p &= ~(low | nb)
                    rest &= p
                    changed = True
        if not p:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(adj, p) <= best_size:
            return
        pivot, pivot_deg = -1, -1
        rest = p
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            d = (adj[v] & p).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        bit = 1 << pivot
        search(p & ~(bit | adj[pivot]), chosen | bit, size + 1)
        search(p & ~bit, chosen, size)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 100))
    try:
        search(g.vertices, 0, 0)
    finally:
        sys.setrecursionlimit(limit)
    return OracleResult(best_size, best_set, nodes)


def enumerate_maximal_sets(g: Graph, cap: int = MAXIMAL_CAP) -> list[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivoting, run on non-neighbourhoods)."""
    if g.n > cap:
        raise CapacityError(f"maximal-set enumeration is limited to n <= {cap} (got n={g.n})")
    adj = g.adj
    closed = [adj[v] | (1 << v) for v in range(g.n)]
    found: list[VertexSet] = []

    def expand(r: VertexSet, p: VertexSet, x: VertexSet) -> None:
        if not p and not x:
            found.append(r)
            return
        # pivot minimising the branches, which are p intersected with the pivot's closed neighbourhood
        pivot_branches = None
        rest = p | x
        while rest:
            low = rest & -rest
            rest ^= low
            cand = p & closed[low.bit_length() - 1]
            if pivot_branches is None or cand.bit_count() < pivot_branches.bit_count():
                pivot_branches = cand
        branches = pivot_branches
        while branches:
            low = branches & -branches
            branches ^= low
            keep = ~closed[low.bit_length() - 1]
            expand(r | low, p & keep, x & keep)
            p &= ~low
            x |= low

    expand(0, g.vertices, 0)
    return canonical(found)
