"""Neighborhood complex polynomials of graphs, with exhaustive identity checks."""

from .classic import (
    domination_polynomial,
    independence_polynomial,
    subgraph_component_polynomial,
    subgraph_polynomial,
)
from .complexes import (
    connected_neighborhood_polynomial,
    disconnected_neighborhood_polynomial,
    independent_neighborhood_polynomial,
    neighborhood_polynomial,
)
from .errors import CapacityError, DomainError, GraphError, ParseError
from .graph import Graph, VertexSet, family, from_edge_list
from .graphio import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .identities import IdentityKind, IdentityReport, run_suite, verify_identity
from .polynomial import BivariatePolynomial, Polynomial

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "CapacityError",
    "DomainError",
    "Graph",
    "GraphError",
    "IdentityKind",
    "IdentityReport",
    "ParseError",
    "Polynomial",
    "VertexSet",
    "connected_neighborhood_polynomial",
    "disconnected_neighborhood_polynomial",
    "domination_polynomial",
    "family",
    "from_edge_list",
    "independence_polynomial",
    "independent_neighborhood_polynomial",
    "neighborhood_polynomial",
    "parse_edge_list",
    "parse_graph6",
    "run_suite",
    "subgraph_component_polynomial",
    "subgraph_polynomial",
    "verify_identity",
    "write_edge_list",
    "write_graph6",
]
