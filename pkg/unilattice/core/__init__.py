"""
Lattice core: posets, bounded lattices and region queries.
"""

from .poset import Poset, build_poset, cover_matrix, transitive_reduction
from .lattice import (
    BoundedLattice,
    ElemSet,
    classify,
    classify_pair,
    comparable_pair,
    coord_classes,
    incomparables,
    interval,
    sets_incomparable,
    validate_bounded_lattice,
)

__all__ = [
    "Poset",
    "build_poset",
    "cover_matrix",
    "transitive_reduction",
    "BoundedLattice",
    "ElemSet",
    "classify",
    "classify_pair",
    "comparable_pair",
    "coord_classes",
    "incomparables",
    "interval",
    "sets_incomparable",
    "validate_bounded_lattice",
]
