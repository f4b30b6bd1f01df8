"""Arithmetic cordial labelings of graphs: structures, constructions, checks and search."""

from . import constructions, equivalence, graphs, numtheory, search, structures
from .errors import (
    CordialError,
    HypothesisFailure,
    LimitExceeded,
    NonBijective,
    NotBipartite,
    ParseError,
    PropertyViolation,
    SizeMismatch,
)
from .expr import graph_from_expr, parse_graph_expr
from .graphs import Graph
from .labeling import EdgeLabelReport, induced_edge_label, is_cordial, verify
from .structures import ArithmeticStructure, StarOp, ZetaSpec, parse_structure

__version__ = "0.1.0"
