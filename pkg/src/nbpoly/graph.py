"""Simple undirected graphs on vertices ``0..n-1`` with bit-vector adjacency.

Vertex sets are stored as Python ints, bit ``v`` set when ``v`` is a member.
The :class:`VertexSet` wrapper pins such a mask to a universe size; the
enumeration engines work on raw masks for speed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphError

MAX_ORDER = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class VertexSet:
    """Subset of ``{0, ..., n-1}`` as a bit-vector."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"bits {self.bits:#x} outside universe of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} outside universe of size {n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise GraphError(f"universe mismatch: {self.n} vs {other.n}")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __invert__(self) -> VertexSet:
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: VertexSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: VertexSet) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbor mask of ``v``."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError(f"negative order {n}")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for order {n}")
        adj = tuple(adj)
        total = 0
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise GraphError(f"neighbors of {v} fall outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += popcount(row)
        self.n = n
        self.adj = adj
        self.m = total // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph of order ``n``; duplicate edges collapse to one."""
    if n < 0:
        raise GraphError(f"negative order {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    adj = [0] * n
    for pair in edges:
        pair = tuple(pair)
        if len(pair) != 2:
            raise GraphError(f"edge {pair} does not have exactly two endpoints")
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {pair} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _mask(G: Graph, X: VertexSet) -> int:
    if not isinstance(X, VertexSet):
        raise TypeError(f"expected VertexSet, got {type(X).__name__}")
    if X.n != G.n:
        raise GraphError(f"vertex set over universe {X.n} used with graph of order {G.n}")
    return X.bits


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for order {G.n}")
    return VertexSet(G.n, G.adj[v])


def closed_mask(adj: Sequence[int], mask: int) -> int:
    out = mask
    for w in iter_bits(mask):
        out |= adj[w]
    return out


def closed_neighborhood_of_set(G: Graph, W: VertexSet) -> VertexSet:
    return VertexSet(G.n, closed_mask(G.adj, _mask(G, W)))


def induced_mask(G: Graph, mask: int) -> Graph:
    """Subgraph induced by ``mask``, relabeled by increasing original label."""
    keep = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(G.adj[v] & mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), adj)


def induced_subgraph(G: Graph, X: VertexSet) -> Graph:
    return induced_mask(G, _mask(G, X))


def independent_mask(adj: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if adj[v] & mask:
            return False
    return True


def is_independent(G: Graph, X: VertexSet) -> bool:
    return independent_mask(G.adj, _mask(G, X))


def components_mask(adj: Sequence[int], mask: int) -> int:
    """Number of connected components of the subgraph induced by ``mask``."""
    count = 0
    while mask:
        reached = frontier = mask & -mask
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & mask & ~reached
            reached |= frontier
        mask &= ~reached
        count += 1
    return count


def component_count(G: Graph, X: VertexSet) -> int:
    return components_mask(G.adj, _mask(G, X))


def is_connected_subset(G: Graph, X: VertexSet) -> bool:
    """Connectivity of ``G[X]``; the empty set counts as connected."""
    mask = _mask(G, X)
    return mask == 0 or components_mask(G.adj, mask) == 1


def isolated_count(G: Graph) -> int:
    return sum(1 for row in G.adj if row == 0)


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, [full & ~row & ~(1 << v) for v, row in enumerate(G.adj)])


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Union with no cross edges; ``G2``'s labels are shifted by ``G1.n``."""
    shift = G1.n
    return Graph(G1.n + G2.n, list(G1.adj) + [row << shift for row in G2.adj])


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    shift = G1.n
    right = ((1 << G2.n) - 1) << shift
    adj = [row | right for row in G1.adj]
    adj += [(row << shift) | G1.full_mask for row in G2.adj]
    return Graph(G1.n + G2.n, adj)


def cartesian_product(G1: Graph, G2: Graph) -> Graph:
    """Cartesian product; vertex ``(u, v)`` gets label ``u * G2.n + v``."""
    n2 = G2.n
    adj = []
    for u in range(G1.n):
        for v in range(n2):
            row = G2.adj[v] << (u * n2)
            for w in iter_bits(G1.adj[u]):
                row |= 1 << (w * n2 + v)
            adj.append(row)
    return Graph(G1.n * n2, adj)


def expansion(G: Graph, r: int) -> Graph:
    """Blow each vertex up to an independent ``r``-set and each edge to K_{r,r}.

    Copy ``i`` of vertex ``v`` gets label ``v * r + i``.
    """
    if not isinstance(r, int) or r < 1:
        raise GraphError(f"expansion factor must be a positive integer, got {r!r}")
    block = (1 << r) - 1
    adj = []
    for v in range(G.n):
        row = 0
        for u in iter_bits(G.adj[v]):
            row |= block << (u * r)
        adj.extend([row] * r)
    return Graph(G.n * r, adj)


def _random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def _random_tree(n: int, seed: int) -> Graph:
    # sequential attachment: vertex v hangs off a uniformly chosen earlier vertex
    rng = random.Random(seed)
    return from_edge_list(n, [(rng.randrange(v), v) for v in range(1, n)])


def _need(cond: bool, name: str, constraint: str) -> None:
    if not cond:
        raise GraphError(f"family {name}: {constraint}")


FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite", "empty", "tree", "random")


def family(name: str, *params) -> Graph:
    """Named graph families.

    ``path(n)``, ``cycle(n)``, ``complete(n)``, ``star(n)`` (``K_{1,n-1}``, center 0),
    ``complete_bipartite(a, b)``, ``empty(n)`` (edgeless), ``tree(n, seed)`` and
    ``random(n, p, seed)``. Random families are deterministic in their arguments.
    """
    def ints(count: int) -> list[int]:
        _need(len(params) == count, name, f"expects {count} parameter(s), got {len(params)}")
        out = []
        for value in params[:count]:
            _need(isinstance(value, int) and not isinstance(value, bool), name,
                  f"parameter {value!r} must be an integer")
            out.append(value)
        return out

    if name == "path":
        (n,) = ints(1)
        _need(n >= 1, name, "n >= 1")
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        (n,) = ints(1)
        _need(n >= 3, name, "n >= 3")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        (n,) = ints(1)
        _need(n >= 1, name, "n >= 1")
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if name == "star":
        (n,) = ints(1)
        _need(n >= 2, name, "n >= 2")
        return from_edge_list(n, [(0, v) for v in range(1, n)])
    if name == "complete_bipartite":
        a, b = ints(2)
        _need(a >= 1 and b >= 1, name, "a >= 1 and b >= 1")
        return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if name == "empty":
        (n,) = ints(1)
        _need(n >= 0, name, "n >= 0")
        return from_edge_list(n, [])
    if name == "tree":
        n, seed = ints(2)
        _need(n >= 1, name, "n >= 1")
        return _random_tree(n, seed)
    if name == "random":
        _need(len(params) == 3, name, f"expects 3 parameters (n, p, seed), got {len(params)}")
        n, p, seed = params
        _need(isinstance(n, int) and n >= 1, name, "n >= 1")
        _need(isinstance(p, (int, float)) and 0.0 <= p <= 1.0, name, "p in [0, 1]")
        _need(isinstance(seed, int), name, "seed must be an integer")
        return _random_graph(n, float(p), seed)
    raise GraphError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")


def maximal_neighborhood_masks(G: Graph) -> list[int]:
    distinct = sorted(set(G.adj))
    return [a for a in distinct if not any(a != b and a & ~b == 0 for b in distinct)]


def maximal_distinct_neighborhoods(G: Graph) -> list[VertexSet]:
    """Distinct open neighborhoods not strictly inside another, ascending by bits."""
    return [VertexSet(G.n, a) for a in maximal_neighborhood_masks(G)]
