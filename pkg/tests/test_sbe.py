from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs, graphs_with_subset
from sbetree.graph import (
    Graph,
    OrderingMode,
    Permutation,
    complete_graph,
    degree_ordering,
    empty_graph,
    induced_degree,
    induced_edge_count,
    is_independent,
    members,
    path_graph,
    vset,
)
from sbetree.oracle import alpha_exact, enumerate_maximal_sets
from sbetree.sbe import (
    CapacityError,
    Layer,
    build_full_tree,
    expand_layer,
    find_split_edge,
    root_layer,
    split_node,
    stability,
)

A, B, C = 0, 1, 2


def brute_stability(g, s):
    k = s.bit_count()
    return sum((Fraction(k, induced_degree(g, s, v) + 1) for v in members(s)), Fraction(0))


def test_find_split_edge_examples():
    assert find_split_edge(path_graph(3), vset([A, C])) is None
    assert find_split_edge(complete_graph(3), 0b111) == (A, B)
    assert find_split_edge(path_graph(3), 0b111, Permutation((B, A, C))) == (B, A)


@given(graphs_with_subset(max_n=10))
def test_find_split_edge_contract(data):
    g, s = data
    for mode in OrderingMode:
        perm = degree_ordering(g, mode)
        edge = find_split_edge(g, s, perm)
        if edge is None:
            assert is_independent(g, s)
            continue
        u, v = edge
        assert s >> u & 1 and s >> v & 1 and g.has_edge(u, v)
        assert perm.rank[u] < perm.rank[v]
        # u is the perm-earliest vertex with an inside neighbour
        earlier = [w for w in perm.order[: perm.rank[u]] if s >> w & 1]
        assert all(not g.adj[w] & s for w in earlier)
        assert all(perm.rank[w] >= perm.rank[v] for w in members(g.adj[u] & s))


def test_split_node_examples():
    assert split_node(complete_graph(2), 0b11, (0, 1)) == (0b01, 0b10)
    assert split_node(complete_graph(3), 0b111, (A, B)) == (vset([A, C]), vset([B, C]))


def test_split_node_preconditions():
    with pytest.raises(ValueError):
        split_node(path_graph(3), vset([A, B]), (B, C))
    with pytest.raises(ValueError):
        split_node(path_graph(3), 0b111, (A, C))


@given(graphs_with_subset(min_n=2, max_n=10))
def test_sibling_laws(data):
    g, s = data
    edge = find_split_edge(g, s)
    if edge is None:
        return
    left, right = split_node(g, s, edge)
    assert left.bit_count() == right.bit_count() == s.bit_count() - 1
    assert left | right == s
    assert left & right == s & ~(1 << edge[0]) & ~(1 << edge[1])


def test_stability_examples():
    g = empty_graph(3)
    assert stability(g, 0b111) == 9
    assert stability(complete_graph(3), 0b111) == 3
    assert brute_stability(complete_graph(3), 0b111) == 3
    assert stability(path_graph(3), 0b111) == 4
    assert brute_stability(path_graph(3), 0b111) == Fraction(3, 2) + 1 + Fraction(3, 2)
    assert stability(g, 0) == 0
    assert isinstance(stability(path_graph(3), 0b011), Fraction)


@given(graphs_with_subset(max_n=10))
def test_stability_bounds(data):
    g, s = data
    if not s:
        return
    k = s.bit_count()
    st = stability(g, s)
    assert st == brute_stability(g, s)
    assert k <= st <= k * k
    assert (st == k * k) == is_independent(g, s)
    assert (st == k) == (induced_edge_count(g, s) == k * (k - 1) // 2)


def test_full_tree_small_examples():
    t = build_full_tree(empty_graph(3))
    assert len(t) == 1 and t.leaves() == [0b111]
    t = build_full_tree(complete_graph(2))
    assert len(t) == 3 and t.leaves() == [0b01, 0b10]
    t = build_full_tree(complete_graph(3))
    assert len(t) == 7
    assert t.leaves() == [vset([A]), vset([C]), vset([B]), vset([C])]
    assert max(t.depth) == 2


def test_full_tree_cap():
    with pytest.raises(CapacityError, match="16"):
        build_full_tree(empty_graph(17))
    with pytest.raises(CapacityError, match="4"):
        build_full_tree(empty_graph(5), cap=4)


@given(graphs(max_n=9))
def test_full_tree_laws(g):
    alpha = alpha_exact(g).alpha
    maximal = set(enumerate_maximal_sets(g))
    for mode in OrderingMode:
        t = build_full_tree(g, degree_ordering(g, mode))
        assert t.content[0] == g.vertices
        for c, d, ch in zip(t.content, t.depth, t.children):
            assert c.bit_count() == g.n - d
            assert (ch is None) == is_independent(g, c)
        assert maximal <= set(t.leaves())
        widths = t.layer_widths()
        assert all(widths[level] == 2**level for level in range(g.n - alpha))
        first = {}
        for c, d in zip(t.content, t.depth):
            assert first.setdefault(c, d) == d


def test_expand_layer_examples():
    k3, p3 = complete_graph(3), path_graph(3)
    nxt, ind = expand_layer(k3, root_layer(k3))
    assert set(nxt.nodes) == {vset([B, C]), vset([A, C])} and ind == []
    assert nxt.depth == 1
    nxt, ind = expand_layer(p3, root_layer(p3))
    assert set(nxt.nodes) == {vset([B, C]), vset([A, C])} and ind == [vset([A, C])]
    layer = Layer(1, (vset([B, C]), vset([A, C])))
    nxt, ind = expand_layer(k3, layer, uniquify=True)
    assert nxt.nodes == (vset([B]), vset([C]), vset([A]))
    assert ind == list(nxt.nodes)
    nxt, _ = expand_layer(k3, layer, uniquify=False)
    assert len(nxt.nodes) == 4


def test_expand_layer_rejects_terminal_layer():
    with pytest.raises(ValueError):
        expand_layer(path_graph(3), Layer(1, (vset([A, C]),)))
