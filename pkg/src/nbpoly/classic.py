"""Independence, domination, subgraph and subgraph component polynomials.

Each polynomial has a brute-force subset sweep plus a second, structurally
different method; the two are cross-checked in the test suite.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CapacityError, GraphError
from .graph import (
    Graph,
    closed_mask,
    components_mask,
    independent_mask,
    iter_bits,
    popcount,
)
from .polynomial import BivariatePolynomial, Polynomial, binomial_power

ORACLE_MAX_ORDER = 24


def check_oracle_capacity(G: Graph) -> None:
    if G.n > ORACLE_MAX_ORDER:
        raise CapacityError(
            f"exhaustive sweep supports order <= {ORACLE_MAX_ORDER}, got {G.n}"
        )


# -- independence -----------------------------------------------------------

def independence_of_mask(adj: Sequence[int], mask: int, memo: dict[int, Polynomial]) -> Polynomial:
    """``I(G[mask])`` by the vertex recursion ``I(G-v) + x I(G-N[v])``.

    The pivot is a vertex of maximum degree inside ``mask`` (lowest label on
    ties). ``memo`` is keyed by mask and may be shared across calls on the
    same adjacency.
    """
    hit = memo.get(mask)
    if hit is not None:
        return hit
    pivot, best = -1, 0
    for v in iter_bits(mask):
        d = popcount(adj[v] & mask)
        if d > best:
            pivot, best = v, d
    if best == 0:
        result = binomial_power(popcount(mask))
    else:
        without = independence_of_mask(adj, mask & ~(1 << pivot), memo)
        rest = independence_of_mask(adj, mask & ~(adj[pivot] | 1 << pivot), memo)
        result = without + Polynomial((0,) + rest.coeffs)
    memo[mask] = result
    return result


def independence_polynomial(G: Graph, method: str = "recursive") -> Polynomial:
    if method == "oracle":
        check_oracle_capacity(G)
        counts = [0] * (G.n + 1)
        for mask in range(1 << G.n):
            if independent_mask(G.adj, mask):
                counts[popcount(mask)] += 1
        return Polynomial(counts)
    if method == "recursive":
        return independence_of_mask(G.adj, G.full_mask, {})
    raise GraphError(f"unknown independence method {method!r}")


# -- domination -------------------------------------------------------------

def domination_polynomial(G: Graph, method: str = "oracle") -> Polynomial:
    """``D(G, x)``; ``via_complement`` uses ``(1+x)^n - N(complement(G), x)``."""
    from .complexes import neighborhood_polynomial
    from .graph import complement

    if G.n == 0:
        raise GraphError("domination polynomial requires a graph with at least one vertex")
    if method == "oracle":
        check_oracle_capacity(G)
        full = G.full_mask
        counts = [0] * (G.n + 1)
        for mask in range(1 << G.n):
            if closed_mask(G.adj, mask) == full:
                counts[popcount(mask)] += 1
        return Polynomial(counts)
    if method == "via_complement":
        return binomial_power(G.n) - neighborhood_polynomial(complement(G), method="auto")
    raise GraphError(f"unknown domination method {method!r}")


# -- connected subsets --------------------------------------------------------

def connected_set_counts(adj: Sequence[int], mask: int) -> list[int]:
    """Count connected nonempty subsets of ``mask`` by size.

    Each connected set is generated exactly once, from its minimum vertex:
    the set grows only through neighbors exclusive to the newest vertex
    (not already in or adjacent to the current set), restricted to labels
    above the root.
    """
    counts = [0] * (popcount(mask) + 1)

    def extend(size: int, sub_closed: int, ext: int, allowed: int) -> None:
        counts[size] += 1
        while ext:
            w = ext & -ext
            ext ^= w
            v = w.bit_length() - 1
            extend(size + 1, sub_closed | adj[v], ext | (adj[v] & allowed & ~sub_closed), allowed)

    for root in iter_bits(mask):
        allowed = mask & ~((1 << (root + 1)) - 1)
        extend(1, adj[root] | 1 << root, adj[root] & allowed, allowed)
    return counts


def subgraph_polynomial(G: Graph, method: str = "growth") -> Polynomial:
    """``S(G, x)``: connected induced subgraphs by order; the empty set is excluded."""
    if G.n == 0:
        raise GraphError("subgraph polynomial requires a graph with at least one vertex")
    if method == "oracle":
        check_oracle_capacity(G)
        counts = [0] * (G.n + 1)
        for mask in range(1, 1 << G.n):
            if components_mask(G.adj, mask) == 1:
                counts[popcount(mask)] += 1
        return Polynomial(counts)
    if method == "growth":
        return Polynomial(connected_set_counts(G.adj, G.full_mask))
    raise GraphError(f"unknown subgraph method {method!r}")


def subgraph_component_polynomial(G: Graph) -> BivariatePolynomial:
    """``Q(G; x, y)`` by sweeping every vertex subset; ``q_00 = 1``."""
    check_oracle_capacity(G)
    terms: dict[tuple[int, int], int] = {}
    for mask in range(1 << G.n):
        key = (popcount(mask), components_mask(G.adj, mask))
        terms[key] = terms.get(key, 0) + 1
    return BivariatePolynomial(terms)
