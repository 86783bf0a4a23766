"""
Theorem lab: lattice enumeration, canonical forms, sweeps and counterexample search.
"""

from .canonical import are_isomorphic, canonical_order, certificate
from .enumeration import carrier_labels, enumerate_bounded_lattices
from .sweep import (
    TheoremLab,
    legacy_checks,
    neutral_candidates,
    sub_operations,
    sweep,
    theorem_conditions,
    verify_characterization,
)
from .search import search_counterexample

__all__ = [
    "are_isomorphic",
    "canonical_order",
    "certificate",
    "carrier_labels",
    "enumerate_bounded_lattices",
    "TheoremLab",
    "legacy_checks",
    "neutral_candidates",
    "sub_operations",
    "sweep",
    "theorem_conditions",
    "verify_characterization",
    "search_counterexample",
]
