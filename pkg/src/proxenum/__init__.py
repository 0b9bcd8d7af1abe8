"""Enumeration of minimal completions and deletions into hereditary graph classes."""

from proxenum.api import SUPPORTED, dual_enumerate, enumerate_solutions
from proxenum.errors import (
    ArgumentError,
    CapabilityError,
    CapacityError,
    ClassMembershipError,
    GraphParseError,
    ProxEnumError,
    VertexRangeError,
)
from proxenum.graph import Graph, complement, find_forbidden
from proxenum.proximity import EnumerationRun, Solution
from proxenum.recognition import canonical_edge_ordering, canonical_vertex_ordering, recognize

__all__ = [
    "SUPPORTED",
    "ArgumentError",
    "CapabilityError",
    "CapacityError",
    "ClassMembershipError",
    "EnumerationRun",
    "Graph",
    "GraphParseError",
    "ProxEnumError",
    "Solution",
    "VertexRangeError",
    "canonical_edge_ordering",
    "canonical_vertex_ordering",
    "complement",
    "dual_enumerate",
    "enumerate_solutions",
    "find_forbidden",
    "recognize",
]
