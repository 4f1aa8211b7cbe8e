"""
Services package - Export all services
"""
from . import credal_service, compose_service, io_service, polytope_service, projection_service
from .cache_service import CacheService, CacheEntry
from .polytope_service import conversion_cache
from .compose_service import CompositionTrace, ProjectionRecord, compose, compose_with_trace, commutes
from .io_service import CredalHRep

__all__ = [
    # Service modules
    "polytope_service",
    "projection_service",
    "credal_service",
    "compose_service",
    "io_service",

    # Services
    "conversion_cache",

    # Classes
    "CacheService",

    # Operations
    "compose",
    "compose_with_trace",
    "commutes",

    # Data classes
    "CacheEntry",
    "CompositionTrace",
    "ProjectionRecord",
    "CredalHRep",
]
