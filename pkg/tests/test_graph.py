import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbpoly.errors import CapacityError, GraphError
from nbpoly.graph import (
    Graph,
    VertexSet,
    cartesian_product,
    closed_neighborhood_of_set,
    complement,
    component_count,
    disjoint_union,
    expansion,
    family,
    from_edge_list,
    induced_subgraph,
    is_connected_subset,
    is_independent,
    isolated_count,
    join,
    maximal_distinct_neighborhoods,
    open_neighborhood,
)
from tests.reference import to_nx


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, edges)


def vs(n, *members):
    return VertexSet.of(n, members)


# -- construction -------------------------------------------------------------

def test_from_edge_list_examples():
    P3 = from_edge_list(3, [{0, 1}, {1, 2}])
    assert P3.edges() == [(0, 1), (1, 2)] and P3.m == 2
    C4 = from_edge_list(4, [{0, 1}, {1, 2}, {2, 3}, {3, 0}])
    assert C4.m == 4 and all(C4.degree(v) == 2 for v in range(4))
    K2 = from_edge_list(2, [(0, 1), (1, 0)])
    assert K2.m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(GraphError, match=str(edges[0])):
        from_edge_list(3, edges)


def test_capacity():
    with pytest.raises(CapacityError):
        from_edge_list(65, [])
    assert from_edge_list(64, []).n == 64


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError):
        Graph(1, [0b1])


def test_order_zero_constructible():
    G = from_edge_list(0, [])
    assert G.n == 0 and G.m == 0


# -- vertex sets --------------------------------------------------------------

def test_vertex_set_algebra():
    a, b = vs(5, 0, 1, 2), vs(5, 2, 3)
    assert set(a | b) == {0, 1, 2, 3}
    assert set(a & b) == {2}
    assert set(~a) == {3, 4}
    assert len(a) == 3 and 4 not in a and 2 in a
    assert vs(5, 2) <= a and not b <= a and vs(5, 2) < a


def test_vertex_set_universe_mismatch():
    with pytest.raises(GraphError):
        vs(3, 0) | vs(4, 0)
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


# -- neighborhoods and predicates -----------------------------------------------

def test_open_neighborhood(P3, K2):
    assert set(open_neighborhood(P3, 1)) == {0, 2}
    assert set(open_neighborhood(K2, 0)) == {1}
    G = disjoint_union(K2, family("complete", 1))
    assert set(open_neighborhood(G, 2)) == set()
    with pytest.raises(IndexError):
        open_neighborhood(P3, 3)


def test_closed_neighborhood(P3, C4):
    assert set(closed_neighborhood_of_set(P3, vs(3, 1))) == {0, 1, 2}
    assert set(closed_neighborhood_of_set(P3, vs(3))) == set()
    assert set(closed_neighborhood_of_set(C4, vs(4, 0))) == {0, 1, 3}


def test_induced_subgraph(P3, C4):
    assert induced_subgraph(C4, vs(4, 1, 3)) == from_edge_list(2, [])
    assert induced_subgraph(family("complete", 3), vs(3, 0, 1)) == family("complete", 2)
    assert induced_subgraph(P3, vs(3, 0, 1, 2)) == P3


def test_independence_predicate(C4, K2):
    assert is_independent(C4, vs(4, 1, 3))
    assert not is_independent(K2, vs(2, 0, 1))
    assert is_independent(C4, vs(4))


def test_component_count_and_connectivity(P3, C4):
    assert component_count(P3, vs(3, 0, 2)) == 2
    assert component_count(P3, vs(3, 0, 1, 2)) == 1
    assert component_count(P3, vs(3)) == 0
    assert is_connected_subset(C4, vs(4, 0, 1, 2))
    assert not is_connected_subset(C4, vs(4, 0, 2))
    assert is_connected_subset(C4, vs(4))


def test_isolated_count(K2):
    assert isolated_count(disjoint_union(K2, family("complete", 1))) == 1
    assert isolated_count(family("cycle", 4)) == 0
    assert isolated_count(family("empty", 5)) == 5


def test_connectivity_exhaustive_against_networkx():
    rng = random.Random(5)
    for n in range(1, 11):
        G = family("random", n, 0.35, rng.randrange(10**6))
        H = to_nx(G)
        for bits in range(1 << n):
            X = VertexSet(n, bits)
            members = list(X)
            expected = nx.number_connected_components(H.subgraph(members)) if members else 0
            assert component_count(G, X) == expected
            assert is_connected_subset(G, X) == (expected == 1 or bits == 0)


# -- operations -------------------------------------------------------------------

def test_complement_examples(P3):
    assert complement(P3).edges() == [(0, 2)]
    assert complement(family("complete", 5)) == family("empty", 5)


@given(graphs())
def test_complement_involution(G):
    assert complement(complement(G)) == G
    assert complement(G).m == G.n * (G.n - 1) // 2 - G.m


def test_disjoint_union_examples(K2, P3):
    G = disjoint_union(K2, family("complete", 1))
    assert G.n == 3 and G.m == 1
    PP = disjoint_union(P3, P3)
    assert PP.n == 6 and PP.m == 4
    assert component_count(PP, PP.vertices()) == 2
    assert disjoint_union(P3, family("empty", 0)) == P3


def test_join_examples(K2):
    K1 = family("complete", 1)
    assert join(K1, K1) == K2
    assert join(K1, K2) == family("complete", 3)
    E2 = family("empty", 2)
    assert nx.is_isomorphic(to_nx(join(E2, E2)), to_nx(family("cycle", 4)))


def test_cartesian_examples(K2, P3):
    sq = cartesian_product(K2, K2)
    assert nx.is_isomorphic(to_nx(sq), to_nx(family("cycle", 4)))
    ladder = cartesian_product(K2, P3)
    assert ladder.n == 6 and ladder.m == 7
    assert cartesian_product(family("complete", 1), P3) == P3


def test_expansion_examples(K2, P3):
    assert nx.is_isomorphic(to_nx(expansion(K2, 2)), to_nx(family("cycle", 4)))
    assert expansion(P3, 1) == P3
    E = expansion(P3, 2)
    assert E.n == 6 and E.m == 8
    with pytest.raises(GraphError):
        expansion(P3, 0)


def test_operation_edge_counts_200_pairs():
    rng = random.Random(99)
    for _ in range(200):
        G1 = family("random", rng.randint(1, 7), rng.random(), rng.randrange(10**6))
        G2 = family("random", rng.randint(1, 7), rng.random(), rng.randrange(10**6))
        J = join(G1, G2)
        assert J.m == G1.m + G2.m + G1.n * G2.n
        C = cartesian_product(G1, G2)
        assert C.m == G1.n * G2.m + G2.n * G1.m
        # labels (u, v) -> u * n2 + v, as in networkx's product on tuples
        ref = nx.cartesian_product(to_nx(G1), to_nx(G2))
        mine = {frozenset(e) for e in C.edges()}
        theirs = {frozenset((a * G2.n + b, c * G2.n + d)) for (a, b), (c, d) in ref.edges()}
        assert mine == theirs
        assert nx.is_isomorphic(to_nx(cartesian_product(family("complete", 1), G1)), to_nx(G1))


@given(graphs(max_n=6, min_n=1), st.integers(1, 3))
@settings(max_examples=50)
def test_expansion_adjacency_rule(G, r):
    E = expansion(G, r)
    assert E.n == G.n * r and E.m == G.m * r * r
    for a in range(E.n):
        for b in range(E.n):
            adjacent = bool(E.adj[a] >> b & 1)
            assert adjacent == bool(G.adj[a // r] >> (b // r) & 1)


# -- families -------------------------------------------------------------------

def test_families():
    assert family("path", 3).edges() == [(0, 1), (1, 2)]
    assert family("cycle", 4).m == 4
    assert family("complete", 4).m == 6
    assert family("star", 4).edges() == [(0, 1), (0, 2), (0, 3)]
    assert family("complete_bipartite", 2, 3).m == 6
    assert family("random", 9, 0.4, 3) == family("random", 9, 0.4, 3)
    T = family("tree", 12, 5)
    assert T.m == 11 and nx.is_tree(to_nx(T))


@pytest.mark.parametrize(
    "name,params,needle",
    [
        ("path", (0,), "n >= 1"),
        ("cycle", (2,), "n >= 3"),
        ("star", (1,), "n >= 2"),
        ("complete_bipartite", (0, 2), "a >= 1"),
        ("random", (3, 1.5, 0), "p in"),
        ("cycle", (), "expects 1"),
        ("hypercube", (3,), "unknown family"),
    ],
)
def test_family_errors(name, params, needle):
    with pytest.raises(GraphError, match=needle):
        family(name, *params)


# -- maximal neighborhoods --------------------------------------------------------

def test_maximal_neighborhood_examples(C4, P3):
    assert [set(s) for s in maximal_distinct_neighborhoods(C4)] == [{0, 2}, {1, 3}]
    star = family("star", 4)
    assert [set(s) for s in maximal_distinct_neighborhoods(star)] == [{0}, {1, 2, 3}]
    assert [set(s) for s in maximal_distinct_neighborhoods(P3)] == [{1}, {0, 2}]


@given(graphs(max_n=9, min_n=1))
def test_maximal_neighborhoods_cover(G):
    M = maximal_distinct_neighborhoods(G)
    nbhds = [open_neighborhood(G, v) for v in range(G.n)]
    assert all(m in nbhds for m in M)
    assert all(any(N <= m for m in M) for N in nbhds)
    assert [m.bits for m in M] == sorted(m.bits for m in M)


@given(graphs())
def test_neighborhood_invariants(G):
    assert sum(len(open_neighborhood(G, v)) for v in range(G.n)) == 2 * G.m
    assert all(v not in open_neighborhood(G, v) for v in range(G.n))
