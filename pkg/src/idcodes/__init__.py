"""Certified identifying codes in triangle-free graphs."""

from .certify import identifying_failures, is_identifying_code
from .construct import (
    ConstructionReport,
    build_identifying_code,
    build_no_false_twins,
    build_with_fraction,
    case2_false_twin_code,
)
from .errors import CertificationError, ColouringError, GraphError, PreconditionError
from .exact import min_identifying_code
from .graph import Graph, false_twin_classes, from_edge_list
from .indep import FractionProvider, shearer_independent_set

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "ColouringError",
    "ConstructionReport",
    "FractionProvider",
    "Graph",
    "GraphError",
    "PreconditionError",
    "build_identifying_code",
    "build_no_false_twins",
    "build_with_fraction",
    "case2_false_twin_code",
    "false_twin_classes",
    "from_edge_list",
    "identifying_failures",
    "is_identifying_code",
    "min_identifying_code",
    "shearer_independent_set",
]
