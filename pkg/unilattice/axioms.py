"""
Uninorm Axioms

Exhaustive verification of commutativity, associativity, monotonicity and
neutrality of a total operation table. Every scan returns the
lexicographically first violation under the fixed element order.
"""

import logging
from typing import Optional

import numpy as np

from .algebra.optable import OpTable
from .core.lattice import BoundedLattice
from .core.poset import cover_matrix
from .errors import MissingNeutralParam
from .models.operation import Axiom, AxiomWitness, UninormReport

logger = logging.getLogger(__name__)


def _first(violations: np.ndarray) -> Optional[tuple]:
    hits = np.argwhere(violations)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _commutativity(L: BoundedLattice, V: np.ndarray) -> Optional[AxiomWitness]:
    hit = _first(V != V.T)
    if hit is None:
        return None
    x, y = hit
    return AxiomWitness(axiom=Axiom.COMMUTATIVITY, elems=(L.label(x), L.label(y)),
                        lhs=L.label(V[x, y]), rhs=L.label(V[y, x]))


def _associativity(L: BoundedLattice, V: np.ndarray) -> Optional[AxiomWitness]:
    idx = np.arange(L.n)
    # left[x, y, z] = U(x, U(y, z)); right[x, y, z] = U(U(x, y), z)
    left = V[idx[:, None, None], V[None, :, :]]
    right = V[V[:, :, None], idx[None, None, :]]
    hit = _first(left != right)
    if hit is None:
        return None
    x, y, z = hit
    return AxiomWitness(axiom=Axiom.ASSOCIATIVITY, elems=(L.label(x), L.label(y), L.label(z)),
                        lhs=L.label(left[hit]), rhs=L.label(right[hit]))


def _monotonicity(L: BoundedLattice, V: np.ndarray, cover_only: bool, both_positions: bool) -> Optional[AxiomWitness]:
    leq = L.leq_table
    below = cover_matrix(leq) if cover_only else leq & ~np.eye(L.n, dtype=bool)
    # first[x, y, z]: U(x, z) <= U(y, z); second[x, y, z]: U(z, x) <= U(z, y)
    first = leq[V[:, None, :], V[None, :, :]]
    ok = first[..., None]
    if both_positions:
        second = leq[V.T[:, None, :], V.T[None, :, :]]
        ok = np.stack([first, second], axis=-1)
    hit = _first(below[:, :, None, None] & ~ok)
    if hit is None:
        return None
    x, y, z, position = hit
    lhs, rhs = (V[x, z], V[y, z]) if position == 0 else (V[z, x], V[z, y])
    return AxiomWitness(axiom=Axiom.MONOTONICITY, elems=(L.label(x), L.label(y), L.label(z)),
                        lhs=L.label(lhs), rhs=L.label(rhs), position=position)


def _neutrality(L: BoundedLattice, V: np.ndarray, e: int) -> Optional[AxiomWitness]:
    hit = _first(V[e, :] != np.arange(L.n))
    if hit is None:
        return None
    (x,) = hit
    return AxiomWitness(axiom=Axiom.NEUTRALITY, elems=(L.label(x),), lhs=L.label(V[e, x]), rhs=L.label(x))


def check_axiom(L: BoundedLattice, U: OpTable, axiom: Axiom, e: Optional[int] = None,
                cover_only: bool = False, assume_commutative: bool = False) -> Optional[AxiomWitness]:
    """
    First violation of ``axiom`` by the full table ``U``, or None.

    Args:
        e: neutral element, required for Neutrality
        cover_only: scan monotonicity over covering pairs only
        assume_commutative: scan monotonicity in the first argument only

    Raises:
        MissingNeutralParam: Neutrality requested without ``e``
    """
    if not U.is_full(L):
        raise ValueError(f"{U!r} is not total on the carrier")
    V = U.values
    axiom = Axiom(axiom)
    if axiom == Axiom.COMMUTATIVITY:
        return _commutativity(L, V)
    if axiom == Axiom.ASSOCIATIVITY:
        return _associativity(L, V)
    if axiom == Axiom.MONOTONICITY:
        return _monotonicity(L, V, cover_only, both_positions=not assume_commutative)
    if axiom == Axiom.NEUTRALITY:
        if e is None:
            raise MissingNeutralParam()
        return _neutrality(L, V, e)
    raise ValueError(f"{axiom.value} does not apply to a full operation table")


def is_uninorm(L: BoundedLattice, U: OpTable, e: int, short_circuit: bool = False) -> UninormReport:
    """
    Run all four uninorm axioms on ``U``.

    With ``short_circuit`` the scan stops at the first violated axiom and the
    remaining ones are listed as unchecked.
    """
    found = {}
    unchecked = []
    for field, axiom in (("commutative", Axiom.COMMUTATIVITY), ("associative", Axiom.ASSOCIATIVITY),
                         ("monotone", Axiom.MONOTONICITY), ("neutral", Axiom.NEUTRALITY)):
        if short_circuit and any(w is not None for w in found.values()):
            unchecked.append(axiom)
            continue
        # A symmetric table only needs the first argument position.
        commutes = "commutative" in found and found["commutative"] is None
        found[field] = check_axiom(L, U, axiom, e=e,
                                   assume_commutative=axiom == Axiom.MONOTONICITY and commutes)

    report = UninormReport(unchecked=unchecked, **found)
    logger.debug(f"{U.name} on {L!r}: uninorm={report.is_uninorm}")
    return report


def replay_witness(L: BoundedLattice, op: OpTable, w: AxiomWitness, neutral: Optional[int] = None) -> bool:
    """
    True iff ``w`` describes a violation that ``op`` actually exhibits.

    Works for full tables and for norms on a sub-domain; ``neutral`` defaults
    to ``op.neutral``.
    """
    elems = [L.index_of(label) for label in w.elems]
    lhs = L.index_of(w.lhs) if w.lhs in L.labels else None
    rhs = L.index_of(w.rhs) if w.rhs is not None and w.rhs in L.labels else None

    if w.axiom == Axiom.CLOSURE:
        x, y = elems
        v = op(x, y)
        return v not in op.domain and (lhs is None or v == lhs)
    if w.axiom == Axiom.COMMUTATIVITY:
        x, y = elems
        return op(x, y) == lhs and op(y, x) == rhs and lhs != rhs
    if w.axiom == Axiom.ASSOCIATIVITY:
        x, y, z = elems
        return op(x, op(y, z)) == lhs and op(op(x, y), z) == rhs and lhs != rhs
    if w.axiom == Axiom.MONOTONICITY:
        x, y, z = elems
        pair = (op(x, z), op(y, z)) if w.position == 0 else (op(z, x), op(z, y))
        return L.leq(x, y) and pair == (lhs, rhs) and not L.leq(lhs, rhs)
    neutral = op.neutral if neutral is None else neutral
    if neutral is None:
        raise MissingNeutralParam()
    (x,) = elems
    return op(neutral, x) == lhs and lhs != x
