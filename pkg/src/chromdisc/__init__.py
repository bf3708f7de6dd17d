"""Chromatic discriminant of simple graphs: three counting methods, two bijections,
and exhaustive checks of the recurrences relating them."""

__version__ = "0.1.0"

from .chromatic import alpha_from_polynomial, chromatic_polynomial, count_proper_colorings
from .graph import Graph, OrderedPartition, new_graph
from .polynomial import Polynomial
from .recurrence import alpha, verify_dc, verify_peterson, verify_peterson_unordered

__all__ = [
    "Graph",
    "OrderedPartition",
    "Polynomial",
    "alpha",
    "alpha_from_polynomial",
    "chromatic_polynomial",
    "count_proper_colorings",
    "new_graph",
    "verify_dc",
    "verify_peterson",
    "verify_peterson_unordered",
]
