"""Exact-arithmetic commutative algebra toolkit.

Presented graded rings over QQ or GF(p), Groebner bases, minimal free
resolutions and Tor, Koszul complexes (classical and simplicial),
André-Quillen homology in low degrees, and Frobenius-based singularity
reports, all with explicit truncation bounds.
"""

__version__ = "0.1.0"

from .errors import DSLError, PreconditionError, ToolkitError, ValidationError
from .polycore import (
    Polynomial,
    PolyRing,
    PrimeField,
    QQ,
    RingPresentation,
    parse_map,
    parse_poly,
    parse_ring,
)

__all__ = [
    "DSLError",
    "PreconditionError",
    "ToolkitError",
    "ValidationError",
    "Polynomial",
    "PolyRing",
    "PrimeField",
    "QQ",
    "RingPresentation",
    "parse_map",
    "parse_poly",
    "parse_ring",
    "__version__",
]
