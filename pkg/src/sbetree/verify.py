"""Invariant checks runnable outside pytest (``sbe verify``)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    OrderingMode,
    degree_ordering,
    induced_degree,
    induced_edge_count,
    is_independent,
    members,
    random_graph,
)
from .oracle import alpha_exact, enumerate_maximal_sets, maximum_sets_bruteforce
from .rng import derive_seed
from .sbe import build_full_tree, stability
from .search import BranchPolicy, SearchConfig, dfs_descend, lbl_search

LEVELS = {"quick": 40, "full": 400}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: int
    failed: int
    first_failure: str = ""


def small_graphs(count: int, n_lo: int, n_hi: int, seed: int = 7) -> list[Graph]:
    """Seeded random graphs with n in [n_lo, n_hi] and densities spread over [0, 1]."""
    graphs = []
    for i in range(count):
        n = n_lo + derive_seed(seed, i, 0) % (n_hi - n_lo + 1)
        top = n * (n - 1) // 2
        m = derive_seed(seed, i, 1) % (top + 1)
        graphs.append(random_graph(n, m, derive_seed(seed, i, 2)))
    return graphs


def all_graphs(n: int) -> list[Graph]:
    pairs = list(combinations(range(n), 2))
    return [
        Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        for mask in range(1 << len(pairs))
    ]


def check_tree_laws(g: Graph) -> str | None:
    maximal = set(enumerate_maximal_sets(g))
    alpha = alpha_exact(g).alpha
    for mode in OrderingMode:
        perm = degree_ordering(g, mode)
        tree = build_full_tree(g, perm)
        leaves = tree.leaves()
        if not all(is_independent(g, s) for s in leaves):
            return f"{mode.value}: dependent leaf"
        if not maximal <= set(leaves):
            return f"{mode.value}: maximal set missing from leaves"
        for c, d in zip(tree.content, tree.depth):
            if c.bit_count() != g.n - d:
                return f"{mode.value}: cardinality law broken"
        widths = tree.layer_widths()
        if any(widths[l] != 2**l for l in range(g.n - alpha)):
            return f"{mode.value}: width law broken {widths}"
        first_leaf_depth = min(d for d, ch in zip(tree.depth, tree.children) if ch is None)
        if first_leaf_depth != g.n - alpha:
            return f"{mode.value}: first leaf at depth {first_leaf_depth}, expected {g.n - alpha}"
        for i, ch in enumerate(tree.children):
            if ch is None:
                continue
            left, right = (tree.content[j] for j in ch)
            parent = tree.content[i]
            if left | right != parent or (left & right).bit_count() != parent.bit_count() - 2:
                return f"{mode.value}: sibling law broken"
    return None


def check_lbl(g: Graph) -> str | None:
    truth = maximum_sets_bruteforce(g)
    for mode in OrderingMode:
        res = lbl_search(g, degree_ordering(g, mode))
        if res.alpha != truth[0].bit_count():
            return f"{mode.value}: alpha {res.alpha} != {truth[0].bit_count()}"
        if sorted(res.maximum_sets) != sorted(truth):
            return f"{mode.value}: maximum sets differ"
        if len(res.layer_widths) - 1 != g.n - res.alpha:
            return f"{mode.value}: stopping depth wrong"
    return None


def check_oracle(g: Graph) -> str | None:
    bnb = alpha_exact(g)
    brute = alpha_exact(g, method="enumerate")
    if bnb.alpha != brute.alpha:
        return f"bnb {bnb.alpha} != enumeration {brute.alpha}"
    if not is_independent(g, bnb.witness) or bnb.witness.bit_count() != bnb.alpha:
        return "bad witness"
    maximal = enumerate_maximal_sets(g)
    for s in maximal:
        if not is_independent(g, s):
            return "dependent maximal set"
        for v in range(g.n):
            if not s >> v & 1 and not g.adj[v] & s:
                return "non-maximal set listed"
    if max(s.bit_count() for s in maximal) != bnb.alpha:
        return "maximal sets miss alpha"
    return None


def check_dfs(g: Graph) -> str | None:
    alpha = alpha_exact(g).alpha
    for mode in OrderingMode:
        for policy in BranchPolicy:
            res = dfs_descend(g, SearchConfig(mode, policy), alpha=alpha)
            if not is_independent(g, res.found) or res.size > alpha or res.depth != g.n - res.size:
                return f"{mode.value}/{policy.value}: bad result"
            if g.m in (0, g.n * (g.n - 1) // 2) and not res.success:
                return f"{mode.value}/{policy.value}: boundary graph failed"
    return None


def check_subsets(g: Graph) -> str | None:
    for s in range(1, 1 << g.n):
        k = s.bit_count()
        st = stability(g, s)
        edges = induced_edge_count(g, s)
        if 2 * edges != sum(induced_degree(g, s, v) for v in members(s)):
            return "handshake identity broken"
        if not k <= st <= k * k:
            return f"stability {st} out of [{k}, {k * k}]"
        if (st == k * k) != (edges == 0) or (edges == 0) != is_independent(g, s):
            return "independence/stability mismatch"
        if (st == k) != (edges == k * (k - 1) // 2):
            return "completeness/stability mismatch"
    return None


def run_checks(level: str = "quick") -> list[CheckResult]:
    count = LEVELS[level]
    suites = [
        ("tree laws", check_tree_laws, small_graphs(count, 1, 9, seed=11)),
        ("layer-by-layer vs enumeration", check_lbl, small_graphs(count, 1, 12, seed=12)),
        ("oracle cross-check", check_oracle, small_graphs(count, 1, 14, seed=13)),
        ("depth-first descent", check_dfs, small_graphs(count, 1, 16, seed=14)),
        ("subset identities", check_subsets, small_graphs(count // 4, 1, 8, seed=15)),
    ]
    results = []
    for name, check, graphs in suites:
        passed = failed = 0
        first = ""
        for g in graphs:
            problem = check(g)
            if problem is None:
                passed += 1
            else:
                failed += 1
                first = first or f"{problem} on graph {g.digest()}"
        results.append(CheckResult(name, passed, failed, first))
    return results
