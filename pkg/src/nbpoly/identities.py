"""Executable checks of the identities relating the neighborhood polynomials.

Each check computes a left-hand side on the input (or composite) graph with
the complex engine, assembles the right-hand side from the closed formula,
and reports the exact residual ``lhs - rhs``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from . import classic, complexes
from .errors import GraphError
from .graph import (
    Graph,
    cartesian_product,
    complement,
    components_mask,
    disjoint_union,
    expansion,
    induced_mask,
    isolated_count,
    join,
)
from .graphio import write_graph6
from .polynomial import Polynomial, binomial_power

class IdentityKind(Enum):
    tree_independent = "tree_independent"
    cycle_independent = "cycle_independent"
    closed_forms = "closed_forms"
    union_independent = "union_independent"
    union_connected = "union_connected"
    join_independent = "join_independent"
    join_independent_corollary = "join_independent_corollary"
    join_connected_as_printed = "join_connected_as_printed"
    join_connected_corrected = "join_connected_corrected"
    cartesian_independent = "cartesian_independent"
    expansion_independent = "expansion_independent"
    domination_complement = "domination_complement"
    decomposition = "decomposition"

    @property
    def arity(self) -> str:
        """``"graph"``, ``"pair"`` or ``"graph+r"``."""
        if self.name.startswith(("union", "join", "cartesian")):
            return "pair"
        if self is IdentityKind.expansion_independent:
            return "graph+r"
        return "graph"

    @classmethod
    def parse(cls, tag: str) -> IdentityKind:
        try:
            return cls[tag]
        except KeyError:
            raise GraphError(f"unknown identity {tag!r}; known: {', '.join(cls.__members__)}") from None


# the printed connected-join formula is opt-in only: its residual is a known +1
DEFAULT_KINDS = tuple(k for k in IdentityKind if k is not IdentityKind.join_connected_as_printed)

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityKind
    inputs: tuple[str, ...]
    lhs: Polynomial | None
    rhs: Polynomial | None
    method: str
    notes: str = ""
    residual: Polynomial | None = field(init=False)
    verdict: str = field(init=False)

    def __post_init__(self) -> None:
        if self.lhs is None or self.rhs is None:
            object.__setattr__(self, "residual", None)
            object.__setattr__(self, "verdict", INAPPLICABLE)
        else:
            residual = self.lhs - self.rhs
            object.__setattr__(self, "residual", residual)
            object.__setattr__(self, "verdict", PASS if residual.is_zero() else FAIL)

    def to_record(self) -> dict:
        def coeffs(p: Polynomial | None):
            return None if p is None else [str(c) for c in p.coeffs]

        return {
            "identity": self.identity.name,
            "inputs": list(self.inputs),
            "lhs": coeffs(self.lhs),
            "rhs": coeffs(self.rhs),
            "residual": coeffs(self.residual),
            "verdict": self.verdict,
            "method": self.method,
            "notes": self.notes,
        }


# -- graph classification -----------------------------------------------------

def is_connected(G: Graph) -> bool:
    return G.n > 0 and components_mask(G.adj, G.full_mask) == 1


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.m == G.n - 1


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and is_connected(G) and all(G.degree(v) == 2 for v in range(G.n))


def is_complete(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n * (G.n - 1) // 2


# -- individual checks ----------------------------------------------------------

def _Ni(G: Graph, method: str) -> Polynomial:
    return complexes.independent_neighborhood_polynomial(G, method)


def _Nc(G: Graph, method: str) -> Polynomial:
    return complexes.connected_neighborhood_polynomial(G, method)


def _N(G: Graph, method: str) -> Polynomial:
    return complexes.neighborhood_polynomial(G, method)


def _I(G: Graph) -> Polynomial:
    return classic.independence_polynomial(G, "recursive")


def _unary(kind: IdentityKind, G: Graph, method: str):
    if kind is IdentityKind.tree_independent:
        if not is_tree(G):
            return None, None, "input is not a tree"
        return _Ni(G, method), _N(G, method), ""
    if kind is IdentityKind.cycle_independent:
        if not (is_cycle(G) and G.n > 3):
            return None, None, "input is not a cycle of order > 3"
        return _Ni(G, method), _N(G, method), ""
    if kind is IdentityKind.closed_forms:
        n = G.n
        if is_complete(G):
            closed = binomial_power(n) - Polynomial.monomial(n)
            N = _N(G, method)
            note = "complete graph: (1+x)^n - x^n; N(G) " + ("agrees" if N == closed else f"differs: {N}")
            return _Nc(G, method), closed, note
        if is_tree(G) and n >= 2:
            return _Nc(G, method), Polynomial((1, n)), "tree: 1 + nx"
        if is_cycle(G) and n > 3:
            return _Nc(G, method), Polynomial((1, n)), "cycle: 1 + nx"
        return None, None, "input is not complete, a tree of order >= 2, or a cycle of order > 3"
    if kind is IdentityKind.domination_complement:
        lhs = classic.domination_polynomial(G, "oracle") + _N(complement(G), method)
        return lhs, binomial_power(G.n), "D(G) by subset sweep"
    if kind is IdentityKind.decomposition:
        Nd = complexes.disconnected_neighborhood_polynomial(G, "oracle")
        rhs = _Ni(G, method) + _Nc(G, method) + Nd - 1 - Polynomial((0, G.n - isolated_count(G)))
        return _N(G, method), rhs, "N^(d) by direct subset sweep"
    raise AssertionError(kind)


def _cartesian_rhs(G1: Graph, G2: Graph, method: str) -> Polynomial:
    n1, n2 = G1.n, G2.n
    rhs = 1 + n1 * (_Ni(G2, method) - 1) + n2 * (_Ni(G1, method) - 1)
    # the double sum over V1 x V2 factors into a product of per-graph sums
    local1 = [_I(induced_mask(G1, G1.adj[u])) - 1 for u in range(n1)]
    local2 = [_I(induced_mask(G2, G2.adj[v])) - 1 for v in range(n2)]
    cross = sum(local1, Polynomial()) * sum(local2, Polynomial())
    return rhs + cross - Polynomial((0, n1 * n2, 2 * G1.m * G2.m))


def _connected_join_printed(G1: Graph, G2: Graph, method: str) -> Polynomial:
    S1 = classic.subgraph_polynomial(G1, "growth")
    S2 = classic.subgraph_polynomial(G2, "growth")
    N1 = _N(G1, method) - 1
    N2 = _N(G2, method) - 1
    return (
        S1 + S2
        + N1 * (binomial_power(G2.n) - 1)
        + N2 * (binomial_power(G1.n) - 1)
        - N1 * N2
    )


def _binary(kind: IdentityKind, G1: Graph, G2: Graph, method: str):
    if G1.n == 0 or G2.n == 0:
        return None, None, "inputs must have at least one vertex"
    if kind is IdentityKind.union_independent:
        return _Ni(disjoint_union(G1, G2), method), _Ni(G1, method) + _Ni(G2, method) - 1, ""
    if kind is IdentityKind.union_connected:
        return _Nc(disjoint_union(G1, G2), method), _Nc(G1, method) + _Nc(G2, method) - 1, ""
    if kind is IdentityKind.join_independent:
        return _Ni(join(G1, G2), method), _I(G1) + _I(G2) - 1, ""
    if kind is IdentityKind.join_independent_corollary:
        J = join(G1, G2)
        return _Ni(J, method), _I(J), ""
    if kind is IdentityKind.join_connected_as_printed:
        return _Nc(join(G1, G2), method), _connected_join_printed(G1, G2, method), "printed form"
    if kind is IdentityKind.join_connected_corrected:
        return (
            _Nc(join(G1, G2), method),
            _connected_join_printed(G1, G2, method) + 1,
            "printed form + 1 (empty set)",
        )
    if kind is IdentityKind.cartesian_independent:
        if isolated_count(G1) or isolated_count(G2):
            return None, None, "both inputs must be free of isolated vertices"
        return _Ni(cartesian_product(G1, G2), method), _cartesian_rhs(G1, G2, method), ""
    raise AssertionError(kind)


def verify_identity(
    kind: IdentityKind | str,
    graphs: Sequence[Graph],
    r: int | None = None,
    labels: Sequence[str] | None = None,
    method: str = "auto",
) -> IdentityReport:
    """Check one identity on one graph, a graph pair, or a graph and expansion factor."""
    if isinstance(kind, str):
        kind = IdentityKind.parse(kind)
    want = 2 if kind.arity == "pair" else 1
    if len(graphs) != want:
        raise GraphError(f"{kind.name} takes {want} graph(s), got {len(graphs)}")
    inputs = tuple(labels) if labels else tuple(write_graph6(G).decode() for G in graphs)
    if kind.arity == "graph+r":
        if r is None:
            raise GraphError(f"{kind.name} needs an expansion factor r")
        inputs += (f"r={r}",)

    if kind.arity == "graph+r":
        G = graphs[0]
        if G.n == 0:
            lhs = rhs = None
            note = "input must have at least one vertex"
        else:
            lhs = _Ni(expansion(G, r), method)
            rhs = _Ni(G, method).compose(binomial_power(r) - 1)
            note = ""
    elif kind.arity == "pair":
        lhs, rhs, note = _binary(kind, graphs[0], graphs[1], method)
    else:
        if graphs[0].n == 0:
            lhs, rhs, note = None, None, "input must have at least one vertex"
        else:
            lhs, rhs, note = _unary(kind, graphs[0], method)
    return IdentityReport(kind, inputs, lhs, rhs, method, note)


# -- suites -------------------------------------------------------------------

@dataclass
class SuiteSummary:
    counts: dict[str, Counter] = field(default_factory=dict)

    def add(self, report: IdentityReport) -> None:
        self.counts.setdefault(report.identity.name, Counter())[report.verdict] += 1

    @property
    def failures(self) -> int:
        return sum(c[FAIL] for c in self.counts.values())

    def to_record(self) -> dict:
        return {
            tag: {v: c[v] for v in (PASS, FAIL, INAPPLICABLE)}
            for tag, c in self.counts.items()
        }


def _composite_order(kind: IdentityKind, G1: Graph, G2: Graph) -> int:
    if kind is IdentityKind.cartesian_independent:
        return G1.n * G2.n
    return G1.n + G2.n


def sample_pairs(
    corpus: Sequence[tuple[str, Graph]],
    kind: IdentityKind,
    count: int,
    rng: random.Random,
    max_order: int,
) -> list[tuple[int, int]]:
    """Draw ``count`` index pairs (with replacement) among the eligible ones.

    A pair is eligible when its composite graph has order at most
    ``max_order``; the Cartesian check also requires both graphs to be free
    of isolated vertices.
    """
    eligible = []
    for i, (_, G1) in enumerate(corpus):
        for j, (_, G2) in enumerate(corpus):
            if G1.n == 0 or G2.n == 0 or _composite_order(kind, G1, G2) > max_order:
                continue
            if kind is IdentityKind.cartesian_independent and (isolated_count(G1) or isolated_count(G2)):
                continue
            eligible.append((i, j))
    if not eligible:
        return []
    return [rng.choice(eligible) for _ in range(count)]


def run_suite(
    corpus: Sequence[tuple[str, Graph]],
    kinds: Iterable[IdentityKind | str],
    pairs: int = 200,
    seed: int = 0,
    method: str = "auto",
    expansion_factors: Sequence[int] = (1, 2, 3),
    max_order: int = 24,
) -> tuple[list[IdentityReport], SuiteSummary]:
    """Run identity checks over a corpus of ``(label, graph)`` entries.

    Unary identities visit every graph; pair identities draw ``pairs``
    seeded samples; the expansion identity visits every graph whose expanded
    order stays within ``max_order`` for each factor. Output order follows
    the declaration order of :class:`IdentityKind`, then corpus order.
    """
    wanted = {IdentityKind.parse(k) if isinstance(k, str) else k for k in kinds}
    reports: list[IdentityReport] = []
    summary = SuiteSummary()
    for kind in IdentityKind:
        if kind not in wanted:
            continue
        rng = random.Random(f"{seed}:{kind.name}")
        if kind.arity == "graph":
            jobs = [((G,), None, (label,)) for label, G in corpus]
        elif kind.arity == "graph+r":
            jobs = [
                ((G,), r, (label,))
                for label, G in corpus
                for r in expansion_factors
                if G.n * r <= max_order
            ]
        else:
            jobs = [
                ((corpus[i][1], corpus[j][1]), None, (corpus[i][0], corpus[j][0]))
                for i, j in sample_pairs(corpus, kind, pairs, rng, max_order)
            ]
        for graphs, r, labels in jobs:
            report = verify_identity(kind, graphs, r=r, labels=labels, method=method)
            reports.append(report)
            summary.add(report)
    return reports, summary
