"""Disjoint Paths and Disjoint Connected Subgraphs on H-free graphs: exact
solvers, polynomial algorithms for restricted classes, hardness gadgets and
oracle cross-checks."""

from .errors import ParseError, PreconditionError, ResourceLimitError
from .graph import Graph
from .instance import Instance, Solution, parse_instance, verify_solution

__all__ = ["Graph", "Instance", "Solution", "ParseError", "PreconditionError", "ResourceLimitError",
           "parse_instance", "verify_solution"]
