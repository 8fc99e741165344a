"""Neighborhood complex polynomials N, N^(i), N^(c) and N^(d).

Every polynomial has two routes:

``oracle``
    sweep all ``2**n`` vertex subsets and test membership directly.
``fast``
    inclusion-exclusion over the maximal distinct open neighborhoods. A set
    lies in the complex iff it fits inside one of them, so for ``k >= 1``

        n_k = sum over nonempty S of (-1)**(|S|+1) * f_k(intersection of S)

    where ``f_k`` counts the qualifying ``k``-subsets of the intersection.
    Subsets of neighborhoods are folded into a map from intersection mask
    to net sign, so repeated intersections are evaluated once, and empty
    intersections are dropped (they only touch the fixed constant term).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Callable

from .classic import check_oracle_capacity, connected_set_counts, independence_of_mask
from .errors import DomainError, GraphError
from .graph import (
    Graph,
    VertexSet,
    components_mask,
    induced_mask,
    isolated_count,
    iter_bits,
    maximal_neighborhood_masks,
    popcount,
)
from .polynomial import Polynomial

AUTO_MAX_NEIGHBORHOODS = 20
METHODS = ("oracle", "fast", "auto")


@dataclass(frozen=True)
class ComplexMembershipWitness:
    subset: VertexSet
    witness: int | None

    @property
    def member(self) -> bool:
        return self.witness is not None


def membership_witness(G: Graph, X: VertexSet) -> ComplexMembershipWitness:
    """Smallest ``v`` with ``X`` inside ``N(v)``, or no witness."""
    if X.n != G.n:
        raise GraphError(f"vertex set over universe {X.n} used with graph of order {G.n}")
    for v, row in enumerate(G.adj):
        if X.bits & ~row == 0:
            return ComplexMembershipWitness(X, v)
    return ComplexMembershipWitness(X, None)


def _require_vertices(G: Graph) -> None:
    if G.n == 0:
        raise DomainError("neighborhood polynomials are undefined for the graph of order 0")


def resolve_method(G: Graph, method: str) -> str:
    """Concrete route (``oracle`` or ``fast``) chosen for ``method`` on ``G``."""
    if method not in METHODS:
        raise GraphError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    if method != "auto":
        return method
    if len(maximal_neighborhood_masks(G)) <= AUTO_MAX_NEIGHBORHOODS:
        return "fast"
    return "oracle" if G.n <= 24 else "fast"


# -- oracle -------------------------------------------------------------------

def _sweep(G: Graph, keep: Callable[[int, int], bool]) -> Polynomial:
    """Count complex members ``X`` with ``keep(X, |X|)`` by size."""
    check_oracle_capacity(G)
    rows = sorted(set(G.adj))
    counts = [0] * (G.n + 1)
    for mask in range(1 << G.n):
        for row in rows:
            if mask & ~row == 0:
                size = popcount(mask)
                if keep(mask, size):
                    counts[size] += 1
                break
    return Polynomial(counts)


def _oracle(G: Graph, kind: str) -> Polynomial:
    adj = G.adj
    if kind == "N":
        return _sweep(G, lambda mask, size: True)
    if kind == "Ni":
        return _sweep(G, lambda mask, size: components_mask(adj, mask) == size)
    if kind == "Nc":
        return _sweep(G, lambda mask, size: size == 0 or components_mask(adj, mask) == 1)
    if kind == "Nd":
        return _sweep(G, lambda mask, size: 1 < components_mask(adj, mask) < size)
    raise AssertionError(kind)


# -- inclusion-exclusion --------------------------------------------------------

def intersection_weights(G: Graph) -> dict[int, int]:
    """Net inclusion-exclusion sign of each nonempty intersection of maximal neighborhoods."""
    weights: dict[int, int] = defaultdict(int)
    for nbhd in maximal_neighborhood_masks(G):
        if not nbhd:
            continue
        for inter, c in list(weights.items()):
            meet = inter & nbhd
            if meet and c:
                weights[meet] -= c
        weights[nbhd] += 1
    return {inter: c for inter, c in weights.items() if c}


def _connected_counts(G: Graph, mask: int, memo: dict[Graph, list[int]]) -> list[int]:
    size = popcount(mask)
    inner = [popcount(G.adj[v] & mask) for v in iter_bits(mask)]
    if all(d == size - 1 for d in inner):
        return [0] + [comb(size, k) for k in range(1, size + 1)]
    if not any(inner):
        return [0, size]
    # keyed by the relabeled induced graph, since equal pieces recur across intersections
    piece = induced_mask(G, mask)
    hit = memo.get(piece)
    if hit is None:
        hit = memo[piece] = connected_set_counts(piece.adj, piece.full_mask)
    return hit


def _fast(G: Graph, kind: str) -> Polynomial:
    weights = intersection_weights(G)
    counts = [0] * (G.n + 1)
    counts[0] = 1
    if kind == "N":
        for inter, c in weights.items():
            size = popcount(inter)
            for k in range(1, size + 1):
                counts[k] += c * comb(size, k)
    elif kind == "Ni":
        memo: dict[int, Polynomial] = {}
        for inter, c in weights.items():
            for k, ik in enumerate(independence_of_mask(G.adj, inter, memo).coeffs):
                if k:
                    counts[k] += c * ik
    elif kind == "Nc":
        memo_s: dict[Graph, list[int]] = {}
        for inter, c in weights.items():
            for k, s in enumerate(_connected_counts(G, inter, memo_s)):
                if k:
                    counts[k] += c * s
    elif kind == "Nd":
        return (
            _fast(G, "N") - _fast(G, "Ni") - _fast(G, "Nc")
            + Polynomial((1, G.n - isolated_count(G)))
        )
    else:
        raise AssertionError(kind)
    return Polynomial(counts)


def _compute(G: Graph, kind: str, method: str) -> Polynomial:
    _require_vertices(G)
    if resolve_method(G, method) == "oracle":
        return _oracle(G, kind)
    return _fast(G, kind)


def neighborhood_polynomial(G: Graph, method: str = "auto") -> Polynomial:
    """``N(G, x)``: members of the neighborhood complex counted by size."""
    return _compute(G, "N", method)


def independent_neighborhood_polynomial(G: Graph, method: str = "auto") -> Polynomial:
    """``N^(i)(G, x)``: independent members of the neighborhood complex."""
    return _compute(G, "Ni", method)


def connected_neighborhood_polynomial(G: Graph, method: str = "auto") -> Polynomial:
    """``N^(c)(G, x)``: complex members inducing a connected subgraph, the empty set included."""
    return _compute(G, "Nc", method)


def disconnected_neighborhood_polynomial(G: Graph, method: str = "auto") -> Polynomial:
    """``N^(d)(G, x)``: complex members ``X`` with ``1 < k(G[X]) < |X|``.

    The fast route rearranges ``N = N^(i) + N^(c) + N^(d) - 1 - (n - iso(G)) x``.
    """
    return _compute(G, "Nd", method)


def complex_members(G: Graph) -> list[VertexSet]:
    """Every member of the neighborhood complex, ascending by bit value."""
    _require_vertices(G)
    seen: set[int] = set()
    for row in set(G.adj):
        sub = row
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & row
    return [VertexSet(G.n, bits) for bits in sorted(seen)]


__all__ = [
    "AUTO_MAX_NEIGHBORHOODS",
    "ComplexMembershipWitness",
    "complex_members",
    "connected_neighborhood_polynomial",
    "disconnected_neighborhood_polynomial",
    "independent_neighborhood_polynomial",
    "intersection_weights",
    "membership_witness",
    "neighborhood_polynomial",
    "resolve_method",
]
