"""Split-by-edges trees.

A node is a vertex set.  A non-independent node ``N`` is split on an edge
``(u, v)`` inside it, ``u`` the earlier endpoint in the active vertex order,
into the children ``N - v`` (left) and ``N - u`` (right); independent nodes
are leaves.  Every child has exactly one vertex fewer than
its parent, so depth and cardinality determine each other.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, Permutation, VertexSet, is_independent, members

DEFAULT_TREE_CAP = 16


class EdgeRule(enum.Enum):
    LEX_FIRST = "lex-first"


class CapacityError(ValueError):
    pass


def find_split_edge(
    g: Graph, s: VertexSet, perm: Permutation | None = None, rule: EdgeRule = EdgeRule.LEX_FIRST
) -> tuple[int, int] | None:
    """Edge ``(u, v)`` to split ``s`` on, or None if ``s`` is independent.

    Under LEX_FIRST, ``u`` is the earliest vertex of ``s`` (in ``perm``) with a
    neighbour inside ``s`` and ``v`` is the earliest such neighbour of ``u``.
    """
    if rule is not EdgeRule.LEX_FIRST:
        raise ValueError(f"unsupported edge rule {rule}")
    adj = g.adj
    if perm is None or perm.is_identity:
        rest = s
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            inside = adj[u] & s
            if inside:
                return u, (inside & -inside).bit_length() - 1
            rest ^= low
        return None
    order = perm.order
    for u in order:
        if s >> u & 1 and adj[u] & s:
            inside = adj[u] & s
            for v in order:
                if inside >> v & 1:
                    return u, v
    return None


def split_node(g: Graph, s: VertexSet, edge: tuple[int, int]) -> tuple[VertexSet, VertexSet]:
    """Children ``(s - v, s - u)`` of ``s`` for ``edge = (u, v)``."""
    u, v = edge
    if not (s >> u & 1 and s >> v & 1):
        raise ValueError(f"edge {edge} is not inside the node")
    if not g.adj[u] >> v & 1:
        raise ValueError(f"vertices {u} and {v} are not adjacent")
    return s & ~(1 << v), s & ~(1 << u)


@lru_cache(maxsize=None)
def lcm_upto(k: int) -> int:
    return math.lcm(*range(1, k + 1)) if k > 0 else 1


def stability_scaled(g: Graph, s: VertexSet, scale: int) -> int:
    """``stability(g, s) * scale`` for any ``scale`` divisible by lcm(1..|s|).

    Integer form used when comparing siblings, which share a common scale.
    """
    adj = g.adj
    k = s.bit_count()
    total = 0
    rest = s
    while rest:
        low = rest & -rest
        total += scale // ((adj[low.bit_length() - 1] & s).bit_count() + 1)
        rest ^= low
    return k * total


def stability(g: Graph, s: VertexSet) -> Fraction:
    """Sum over ``v`` in ``s`` of ``|s| / (deg_s(v) + 1)``, exactly.

    Ranges from ``|s|`` (complete) to ``|s|**2`` (independent).  The empty
    set scores 0.
    """
    if not s:
        return Fraction(0)
    scale = lcm_upto(s.bit_count())
    return Fraction(stability_scaled(g, s, scale), scale)


# --- full (non-uniquified) trees -------------------------------------------


@dataclass(frozen=True)
class FullTree:
    """Nodes in breadth-first order; ``children[i]`` is None for leaves."""

    content: tuple[VertexSet, ...]
    depth: tuple[int, ...]
    parent: tuple[int, ...]
    children: tuple[tuple[int, int] | None, ...]
    split_edge: tuple[tuple[int, int] | None, ...]

    def __len__(self) -> int:
        return len(self.content)

    def leaves(self) -> list[VertexSet]:
        return [c for c, ch in zip(self.content, self.children) if ch is None]

    def layer_widths(self) -> list[int]:
        widths = [0] * (max(self.depth) + 1)
        for d in self.depth:
            widths[d] += 1
        return widths


def build_full_tree(
    g: Graph,
    perm: Permutation | None = None,
    rule: EdgeRule = EdgeRule.LEX_FIRST,
    cap: int = DEFAULT_TREE_CAP,
) -> FullTree:
    if g.n > cap:
        raise CapacityError(f"full trees are limited to n <= {cap} (got n={g.n})")
    content = [g.vertices]
    depth = [0]
    parent = [-1]
    children: list[tuple[int, int] | None] = []
    edges: list[tuple[int, int] | None] = []
    i = 0
    while i < len(content):
        s = content[i]
        edge = find_split_edge(g, s, perm, rule)
        edges.append(edge)
        if edge is None:
            children.append(None)
        else:
            left, right = split_node(g, s, edge)
            base = len(content)
            content += [left, right]
            depth += [depth[i] + 1] * 2
            parent += [i, i]
            children.append((base, base + 1))
        i += 1
    return FullTree(tuple(content), tuple(depth), tuple(parent), tuple(children), tuple(edges))


# --- layers ----------------------------------------------------------------


@dataclass(frozen=True)
class Layer:
    depth: int
    nodes: tuple[VertexSet, ...]


def root_layer(g: Graph) -> Layer:
    return Layer(0, (g.vertices,))


def expand_layer(
    g: Graph,
    layer: Layer,
    perm: Permutation | None = None,
    rule: EdgeRule = EdgeRule.LEX_FIRST,
    uniquify: bool = True,
) -> tuple[Layer, list[VertexSet]]:
    """Split every node of ``layer``; return the next layer and its independent nodes.

    With ``uniquify`` the next layer keeps only the first occurrence of each
    set, in generation order.
    """
    nxt: list[VertexSet] = []
    for s in layer.nodes:
        edge = find_split_edge(g, s, perm, rule)
        if edge is None:
            raise ValueError(f"cannot expand independent node {sorted(members(s))}")
        nxt += split_node(g, s, edge)
    if uniquify:
        nxt = list(dict.fromkeys(nxt))
    independents = [s for s in nxt if is_independent(g, s)]
    return Layer(layer.depth + 1, tuple(nxt)), independents
