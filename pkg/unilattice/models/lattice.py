"""
Lattice Models

Element handles and the region vocabulary used by the piecewise constructions.
"""

from enum import Enum
from itertools import product
from typing import NamedTuple, Tuple


class Elem(NamedTuple):
    """An element of a finite carrier: its label and its position in the fixed linear extension."""
    label: str
    index: int


class CoordClass(str, Enum):
    """Position of an element relative to a designated neutral candidate e."""
    BELOW = "Below"
    EQUAL = "Equal"
    ABOVE = "Above"
    INCOMP = "Incomp"


class RegionPair(NamedTuple):
    first: CoordClass
    second: CoordClass

    def __str__(self) -> str:
        return f"({self.first.value}, {self.second.value})"


ALL_REGION_PAIRS: Tuple[RegionPair, ...] = tuple(
    RegionPair(a, b) for a, b in product(CoordClass, repeat=2)
)
