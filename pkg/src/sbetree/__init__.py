"""Split-by-edges trees for maximum independent set search."""

from .graph import (
    Graph,
    OrderingMode,
    Permutation,
    degree_ordering,
    induced_degree,
    induced_edge_count,
    is_independent,
    random_graph,
)
from .oracle import alpha_exact, enumerate_maximal_sets
from .sbe import EdgeRule, build_full_tree, expand_layer, find_split_edge, split_node, stability
from .search import BranchPolicy, SearchConfig, SearchResult, choose_branch, dfs_descend, lbl_search

__all__ = [
    "BranchPolicy",
    "EdgeRule",
    "Graph",
    "OrderingMode",
    "Permutation",
    "SearchConfig",
    "SearchResult",
    "alpha_exact",
    "build_full_tree",
    "choose_branch",
    "degree_ordering",
    "dfs_descend",
    "enumerate_maximal_sets",
    "expand_layer",
    "find_split_edge",
    "induced_degree",
    "induced_edge_count",
    "is_independent",
    "lbl_search",
    "random_graph",
    "split_node",
    "stability",
]
