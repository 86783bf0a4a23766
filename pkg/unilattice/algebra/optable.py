"""
Operation Tables

A total binary operation on a declared domain of a finite lattice, stored as a
dense table over the whole carrier with ``-1`` outside ``domain x domain``.
"""

import hashlib
from typing import Callable, Iterable, Optional, Tuple

import numpy as np

from ..core.lattice import BoundedLattice

UNDEFINED = -1


class OpTable:
    """Immutable operation table. ``op(x, y)`` looks up the value at ``(x, y)``."""

    def __init__(self, domain: Iterable[int], values: np.ndarray, neutral: Optional[int] = None, name: str = "U"):
        self.domain: Tuple[int, ...] = tuple(sorted(domain))
        values = np.array(values, dtype=np.int64)
        inside = values[np.ix_(self.domain, self.domain)]
        if (inside == UNDEFINED).any():
            raise ValueError(f"Operation table {name} is not total on its domain")
        values.flags.writeable = False
        self.values = values
        self.neutral = neutral
        self.name = name

    @classmethod
    def from_function(cls, L: BoundedLattice, domain: Iterable[int], fn: Callable[[int, int], int],
                      neutral: Optional[int] = None, name: str = "U") -> "OpTable":
        domain = tuple(sorted(domain))
        values = np.full((L.n, L.n), UNDEFINED, dtype=np.int64)
        for x in domain:
            for y in domain:
                values[x, y] = fn(x, y)
        return cls(domain, values, neutral, name)

    def __call__(self, x: int, y: int) -> int:
        return int(self.values[x, y])

    def is_full(self, L: BoundedLattice) -> bool:
        return len(self.domain) == L.n

    def restrict(self, domain: Iterable[int], name: Optional[str] = None) -> "OpTable":
        domain = tuple(sorted(domain))
        values = np.full_like(self.values, UNDEFINED)
        idx = np.ix_(domain, domain)
        values[idx] = self.values[idx]
        return OpTable(domain, values, self.neutral, name or self.name)

    def digest(self) -> str:
        payload = np.asarray(self.domain, dtype=np.int64).tobytes() + self.values.tobytes()
        return hashlib.sha256(payload).hexdigest()[:12]

    def serialize(self, L: BoundedLattice) -> str:
        """Row-major ``x*y=v`` listing over the domain, using labels."""
        return " ".join(
            f"{L.label(x)}*{L.label(y)}={L.label(self(x, y))}" for x in self.domain for y in self.domain
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, OpTable):
            return NotImplemented
        return self.domain == other.domain and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.domain, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"OpTable({self.name}, |domain|={len(self.domain)})"
