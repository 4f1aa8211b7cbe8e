"""
Models package - Export all models
"""
from .polytope import Point, VertexSet, Constraint, HalfspaceSystem, LinearMap, as_point, dot
from .credal import Cell, Variable, Scope, Distribution, CredalSet, check_distribution
from .files import (
    VariableModel,
    ConstraintModel,
    CredalFile,
    PointFile,
    ProjectionRecordModel,
    TraceFile,
)

__all__ = [
    # Polytopes
    "Point",
    "VertexSet",
    "Constraint",
    "HalfspaceSystem",
    "LinearMap",
    "as_point",
    "dot",

    # Credal sets
    "Cell",
    "Variable",
    "Scope",
    "Distribution",
    "CredalSet",
    "check_distribution",

    # Files
    "VariableModel",
    "ConstraintModel",
    "CredalFile",
    "PointFile",
    "ProjectionRecordModel",
    "TraceFile",
]
