"""
Core package - exceptions shared by all services
"""
from .exceptions import (
    CredalError,
    DimensionMismatch,
    EmptyPolytope,
    UnboundedPolytope,
    ScopeMismatch,
    ScopesOverlap,
    NotAbsolutelyContinuous,
    EmptyFiber,
    ParseError,
    InvariantViolation,
    ProjectionError,
)

__all__ = [
    "CredalError",
    "DimensionMismatch",
    "EmptyPolytope",
    "UnboundedPolytope",
    "ScopeMismatch",
    "ScopesOverlap",
    "NotAbsolutelyContinuous",
    "EmptyFiber",
    "ParseError",
    "InvariantViolation",
    "ProjectionError",
]
