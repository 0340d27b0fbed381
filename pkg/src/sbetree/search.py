"""Depth-first descent and layer-by-layer search over split-by-edges trees."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import (
    Graph,
    OrderingMode,
    Permutation,
    VertexSet,
    degree_ordering,
    induced_edge_count,
)
from .sbe import EdgeRule, expand_layer, find_split_edge, lcm_upto, root_layer, split_node, stability_scaled


class BranchPolicy(enum.Enum):
    ALWAYS_LEFT = "left"
    FEWEST_EDGES = "fewest"
    MOST_STABLE = "most-stable"


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class SearchConfig:
    ordering: OrderingMode = OrderingMode.ARBITRARY
    policy: BranchPolicy = BranchPolicy.MOST_STABLE
    edge_rule: EdgeRule = EdgeRule.LEX_FIRST

    @property
    def name(self) -> str:
        return f"{ORDERING_TOKENS[self.ordering]}/{self.policy.value}"


ORDERING_TOKENS = {
    OrderingMode.ARBITRARY: "arb",
    OrderingMode.ASCENDING: "asc",
    OrderingMode.DESCENDING: "desc",
}


@dataclass(frozen=True)
class SearchResult:
    found: VertexSet
    size: int
    depth: int
    alpha: int | None = None
    success: bool | None = None
    path: tuple[tuple[int, Side], ...] | None = None


def choose_branch(g: Graph, left: VertexSet, right: VertexSet, policy: BranchPolicy) -> Side:
    """Pick the child to descend into; ties go left."""
    if policy is BranchPolicy.ALWAYS_LEFT:
        return Side.LEFT
    if policy is BranchPolicy.FEWEST_EDGES:
        return Side.RIGHT if induced_edge_count(g, right) < induced_edge_count(g, left) else Side.LEFT
    if policy is BranchPolicy.MOST_STABLE:
        # common denominator so the comparison is exact for any cardinalities
        scale = lcm_upto(max(left.bit_count(), right.bit_count()))
        if stability_scaled(g, right, scale) > stability_scaled(g, left, scale):
            return Side.RIGHT
        return Side.LEFT
    raise ValueError(f"unknown policy {policy}")


def dfs_descend(
    g: Graph,
    cfg: SearchConfig = SearchConfig(),
    alpha: int | None = None,
    trace: bool = False,
    perm: Permutation | None = None,
) -> SearchResult:
    """Greedy root-to-leaf descent; no backtracking.

    ``perm`` overrides the ordering derived from ``cfg.ordering`` (useful when
    the caller already computed it).  With ``alpha`` given, the result carries
    the success flag.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if perm is None:
        perm = degree_ordering(g, cfg.ordering)
    node = g.vertices
    path = [] if trace else None
    while True:
        edge = find_split_edge(g, node, perm, cfg.edge_rule)
        if edge is None:
            break
        left, right = split_node(g, node, edge)
        side = choose_branch(g, left, right, cfg.policy)
        if path is not None:
            path.append((node.bit_count(), side))
        node = left if side is Side.LEFT else right
    size = node.bit_count()
    success = None if alpha is None else size == alpha
    return SearchResult(
        found=node,
        size=size,
        depth=g.n - size,
        alpha=alpha,
        success=success,
        path=None if path is None else tuple(path),
    )


@dataclass(frozen=True)
class LblResult:
    alpha: int
    maximum_sets: tuple[VertexSet, ...]
    layer_widths: tuple[int, ...]

    @property
    def total_nodes(self) -> int:
        return sum(self.layer_widths)


def lbl_search(g: Graph, perm: Permutation | None = None, rule: EdgeRule = EdgeRule.LEX_FIRST) -> LblResult:
    """Exact search: expand uniquified layers until one holds an independent node.

    That layer sits at depth ``n - alpha`` and its independent nodes are
    exactly the maximum independent sets of ``g``.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    layer = root_layer(g)
    widths = [1]
    if g.m == 0:
        return LblResult(g.n, layer.nodes, tuple(widths))
    while True:
        layer, independents = expand_layer(g, layer, perm, rule, uniquify=True)
        widths.append(len(layer.nodes))
        if independents:
            return LblResult(g.n - layer.depth, tuple(independents), tuple(widths))
