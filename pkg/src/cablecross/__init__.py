"""Crossing numbers of cables of adequate knots."""

from .diagram import Diagram, DiagramError, catalog, connected_sum, mirror, parse_pd, writhe
from .laurent import LaurentPoly, degree_span
from .states import DiagramStats, StateGraph, is_adequate, resolve, state_graph, stats

__all__ = [
    "Diagram", "DiagramError", "DiagramStats", "LaurentPoly", "StateGraph",
    "catalog", "connected_sum", "degree_span", "is_adequate", "mirror", "parse_pd",
    "resolve", "state_graph", "stats", "writhe",
]
