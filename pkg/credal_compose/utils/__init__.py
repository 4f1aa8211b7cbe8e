"""
Utils package - exact number helpers
"""
from .rational import (
    Rational,
    to_rational,
    format_exact,
    format_rounded,
    format_number,
)

__all__ = [
    "Rational",
    "to_rational",
    "format_exact",
    "format_rounded",
    "format_number",
]
