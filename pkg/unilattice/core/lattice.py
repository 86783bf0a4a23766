"""
Bounded Lattices

Validation of a poset as a bounded lattice with eagerly materialized meet and
join tables, and the order queries used by every later layer: intervals,
incomparability, and classification relative to a neutral candidate.
"""

import logging
from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple

import numpy as np

from ..errors import BadNeutral, NoJoin, NoMeet, NotBounded, NotComparable
from ..models.lattice import CoordClass, Elem, RegionPair
from .poset import Poset

logger = logging.getLogger(__name__)

ElemSet = FrozenSet[int]


class BoundedLattice:
    """
    Bounded lattice over a validated poset. Elements are referred to by index.

    Instances are immutable and safe to share between worker processes.
    """

    def __init__(self, poset: Poset, meet: np.ndarray, join: np.ndarray, bottom: int, top: int):
        for table in (meet, join):
            table.flags.writeable = False
        self.poset = poset
        self.meet_table = meet
        self.join_table = join
        self.bottom = bottom
        self.top = top

    # Carrier

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.poset.labels

    @property
    def leq_table(self) -> np.ndarray:
        return self.poset.leq

    @property
    def elems(self):
        return self.poset.elems

    @property
    def declared_order(self) -> Tuple[int, ...]:
        return self.poset.declared_order

    def index_of(self, label: str) -> int:
        return self.poset.index_of(label)

    def label(self, i: int) -> str:
        return self.poset.labels[i]

    def elem(self, label: str) -> Elem:
        return Elem(label, self.index_of(label))

    def __repr__(self) -> str:
        return f"BoundedLattice({' '.join(self.labels)})"

    # Order queries

    def leq(self, x: int, y: int) -> bool:
        return bool(self.poset.leq[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.poset.leq[x, y])

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.poset.leq[x, y] or self.poset.leq[y, x])

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self.join_table[x, y])

    def check_neutral(self, e: int) -> int:
        """Reject neutral candidates equal to bottom or top."""
        if e in (self.bottom, self.top):
            raise BadNeutral(self.label(e))
        return e


def _extremum(candidates: np.ndarray, below: np.ndarray) -> np.ndarray:
    """Elements of ``candidates`` that every other candidate is below (per ``below``)."""
    sub = below[np.ix_(candidates, candidates)]
    return candidates[sub.all(axis=0)]


def _maximal(candidates: np.ndarray, leq: np.ndarray) -> list:
    sub = leq[np.ix_(candidates, candidates)] & ~np.eye(len(candidates), dtype=bool)
    return [int(c) for c, dominated in zip(candidates, sub.any(axis=1)) if not dominated]


def _minimal(candidates: np.ndarray, leq: np.ndarray) -> list:
    sub = leq[np.ix_(candidates, candidates)] & ~np.eye(len(candidates), dtype=bool)
    return [int(c) for c, dominating in zip(candidates, sub.any(axis=0)) if not dominating]


def validate_bounded_lattice(p: Poset) -> BoundedLattice:
    """
    Materialize meet and join tables and the bounds of ``p``.

    Raises:
        NotBounded: no global bottom or top
        NoMeet / NoJoin: some pair lacks a unique infimum / supremum
    """
    n = p.n
    leq = p.leq
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        everything = np.arange(n)
        raise NotBounded(
            [p.label(i) for i in _minimal(everything, leq)],
            [p.label(i) for i in _maximal(everything, leq)],
        )

    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            greatest = _extremum(lower, leq)
            if len(greatest) != 1:
                raise NoMeet(p.label(x), p.label(y), [p.label(i) for i in _maximal(lower, leq)])
            upper = np.flatnonzero(leq[x, :] & leq[y, :])
            least = _extremum(upper, leq.T)
            if len(least) != 1:
                raise NoJoin(p.label(x), p.label(y), [p.label(i) for i in _minimal(upper, leq)])
            meet[x, y] = meet[y, x] = greatest[0]
            join[x, y] = join[y, x] = least[0]

    logger.debug(f"Validated bounded lattice on {n} elements")
    return BoundedLattice(p, meet, join, int(bottoms[0]), int(tops[0]))


# Intervals and incomparability

def interval(L: BoundedLattice, a: int, b: int, lower_closed: bool = True, upper_closed: bool = True) -> ElemSet:
    """``{x : a <= x <= b}`` with each endpoint kept or dropped per its flag."""
    if not L.leq(a, b):
        raise NotComparable(L.label(a), L.label(b))
    members = set(np.flatnonzero(L.leq_table[a, :] & L.leq_table[:, b]).tolist())
    if not lower_closed:
        members.discard(a)
    if not upper_closed:
        members.discard(b)
    return frozenset(members)


def incomparables(L: BoundedLattice, e: int) -> ElemSet:
    """``I_e``: elements incomparable with ``e``."""
    comparable = L.leq_table[e, :] | L.leq_table[:, e]
    return frozenset(np.flatnonzero(~comparable).tolist())


def sets_incomparable(L: BoundedLattice, A: Iterable[int], B: Iterable[int]) -> bool:
    """True iff every member of ``A`` is incomparable with every member of ``B`` (vacuous on empty sets)."""
    return comparable_pair(L, A, B) is None


def comparable_pair(L: BoundedLattice, A: Iterable[int], B: Iterable[int]):
    """First ``(x, y)`` in index order with ``x in A``, ``y in B`` comparable, or None."""
    for x in sorted(A):
        for y in sorted(B):
            if L.comparable(x, y):
                return x, y
    return None


# Region classification

def classify(L: BoundedLattice, e: int, x: int) -> CoordClass:
    return coord_classes(L, e)[x]


def classify_pair(L: BoundedLattice, e: int, x: int, y: int) -> RegionPair:
    classes = coord_classes(L, e)
    return RegionPair(classes[x], classes[y])


def coord_classes(L: BoundedLattice, e: int) -> Tuple[CoordClass, ...]:
    """Class of every element relative to ``e``, in index order."""
    return _coord_classes(L, e)


@lru_cache(maxsize=256)
def _coord_classes(L: BoundedLattice, e: int) -> Tuple[CoordClass, ...]:
    classes = []
    for x in range(L.n):
        if x == e:
            classes.append(CoordClass.EQUAL)
        elif L.leq(x, e):
            classes.append(CoordClass.BELOW)
        elif L.leq(e, x):
            classes.append(CoordClass.ABOVE)
        else:
            classes.append(CoordClass.INCOMP)
    return tuple(classes)
