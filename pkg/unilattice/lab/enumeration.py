"""
Lattice Enumeration

All bounded lattices of a given size up to isomorphism. The strict order on
the elements between bottom and top is grown one element at a time, each new
element receiving a down-closed set of earlier elements as its lower cone, so
every poset appears under at least one natural labelling. Survivors of the
lattice check are deduplicated by certificate.
"""

import logging
from typing import Iterator, List, Optional, Set

import numpy as np

from ..config import HARD_LATTICE_CAP, get_settings
from ..core.lattice import BoundedLattice, validate_bounded_lattice
from ..core.poset import Poset
from ..errors import CapExceeded, NoJoin, NoMeet
from .canonical import certificate

logger = logging.getLogger(__name__)


def carrier_labels(n: int) -> List[str]:
    """``0, x1, ..., x{n-2}, 1``; a singleton carrier is just ``0``."""
    if n == 1:
        return ["0"]
    return ["0"] + [f"x{i}" for i in range(1, n - 1)] + ["1"]


def _middle_orders(m: int) -> Iterator[np.ndarray]:
    """Naturally labelled strict orders on ``m`` elements as ``m x m`` boolean matrices."""
    below = np.zeros((m, m), dtype=bool)

    def grow(k: int) -> Iterator[np.ndarray]:
        if k == m:
            yield below.copy()
            return
        for mask in range(1 << k):
            cone = [i for i in range(k) if mask >> i & 1]
            if all(below[j, i] <= (mask >> j & 1) for i in cone for j in range(k)):
                below[cone, k] = True
                yield from grow(k + 1)
                below[:, k] = False

    yield from grow(0)


def _with_bounds(middle: np.ndarray) -> np.ndarray:
    m = len(middle)
    n = m + 2
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    leq[1:n - 1, 1:n - 1] |= middle
    return leq


def enumerate_bounded_lattices(n: int, cap: Optional[int] = None) -> Iterator[BoundedLattice]:
    """
    Yield every ``n``-element bounded lattice exactly once up to isomorphism,
    in a fixed order.

    Raises:
        CapExceeded: ``n`` is above ``cap`` (settings default, never above 8)
    """
    cap = cap if cap is not None else get_settings().lattice_cap
    if n > min(cap, HARD_LATTICE_CAP):
        raise CapExceeded(n, min(cap, HARD_LATTICE_CAP))
    if n < 1:
        raise ValueError(f"Lattice size must be positive, got {n}")

    labels = carrier_labels(n)
    if n == 1:
        yield validate_bounded_lattice(Poset(labels, np.ones((1, 1), dtype=bool)))
        return

    seen: Set[str] = set()
    candidates = 0
    for middle in _middle_orders(n - 2):
        candidates += 1
        try:
            L = validate_bounded_lattice(Poset(labels, _with_bounds(middle)))
        except (NoMeet, NoJoin):
            continue
        cert = certificate(L)
        if cert in seen:
            continue
        seen.add(cert)
        yield L

    logger.info(f"Enumerated {len(seen)} lattices on {n} elements from {candidates} candidate orders")
