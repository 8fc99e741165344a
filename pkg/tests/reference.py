"""Slow, set-based reference counts used as an independent oracle in tests.

Works on explicit vertex lists and edge sets via networkx and itertools; it
shares no code with the bit-vector engines under test.
"""

from itertools import combinations

import networkx as nx


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def _trim(counts):
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def subsets(H):
    nodes = sorted(H.nodes)
    for k in range(len(nodes) + 1):
        for combo in combinations(nodes, k):
            yield set(combo)


def components(H, X):
    return nx.number_connected_components(H.subgraph(X)) if X else 0


def in_complex(H, X):
    return any(X <= set(H[v]) for v in H.nodes)


def complex_counts(H, keep=lambda H, X: True):
    counts = [0] * (H.number_of_nodes() + 1)
    for X in subsets(H):
        if in_complex(H, X) and keep(H, X):
            counts[len(X)] += 1
    return _trim(counts)


def N(H):
    return complex_counts(H)


def Ni(H):
    return complex_counts(H, lambda H, X: components(H, X) == len(X))


def Nc(H):
    return complex_counts(H, lambda H, X: not X or components(H, X) == 1)


def Nd(H):
    return complex_counts(H, lambda H, X: 1 < components(H, X) < len(X))


def I(H):
    counts = [0] * (H.number_of_nodes() + 1)
    for X in subsets(H):
        if H.subgraph(X).number_of_edges() == 0:
            counts[len(X)] += 1
    return _trim(counts)


def D(H):
    counts = [0] * (H.number_of_nodes() + 1)
    for X in subsets(H):
        if nx.is_dominating_set(H, X):
            counts[len(X)] += 1
    return _trim(counts)


def S(H):
    counts = [0] * (H.number_of_nodes() + 1)
    for X in subsets(H):
        if X and nx.is_connected(H.subgraph(X)):
            counts[len(X)] += 1
    return _trim(counts)


def Q(H):
    out = {}
    for X in subsets(H):
        key = (len(X), components(H, X))
        out[key] = out.get(key, 0) + 1
    return out
