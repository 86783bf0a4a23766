"""
Structural Conditions

Order-theoretic conditions that characterize when each construction is a
uninorm. None of them looks at a constructed table; only
``p_annihilation_condition`` consults the t-norm.
"""

import logging
from typing import Dict, List, Optional

from .algebra.norms import canonical_tnorm_meet, check_norm_axioms, scan_norm_axioms
from .algebra.optable import OpTable
from .core.lattice import BoundedLattice, ElemSet, comparable_pair, incomparables, interval
from .errors import SubOpInvalid
from .models.condition import ConditionId, ConditionResult
from .models.operation import NormRole

logger = logging.getLogger(__name__)


def _closure_condition(L: BoundedLattice, e: int, condition: ConditionId) -> ConditionResult:
    L.check_neutral(e)
    ie = sorted(incomparables(L, e))
    if not ie:
        return ConditionResult(condition=condition, holds=True, branches=["vacuous"])

    if condition == ConditionId.MEET_CLOSURE:
        combine, absorbing, names = L.meet, L.bottom, ("meet_zero", "meet_in_ie")
    else:
        combine, absorbing, names = L.join, L.top, ("join_top", "join_in_ie")

    members = set(ie)
    branches = set()
    for y in ie:
        for z in ie:
            v = combine(y, z)
            if v == absorbing:
                branches.add(names[0])
            elif v in members:
                branches.add(names[1])
            else:
                return ConditionResult(condition=condition, holds=False,
                                       witness=(L.label(y), L.label(z)), value=L.label(v),
                                       branches=["violation"])
    return ConditionResult(condition=condition, holds=True, branches=sorted(branches))


def meet_closure_condition(L: BoundedLattice, e: int) -> ConditionResult:
    """Every meet of two elements of I_e lies in I_e or is bottom."""
    return _closure_condition(L, e, ConditionId.MEET_CLOSURE)


def join_closure_condition(L: BoundedLattice, e: int) -> ConditionResult:
    """Every join of two elements of I_e lies in I_e or is top."""
    return _closure_condition(L, e, ConditionId.JOIN_CLOSURE)


def norm_on_ie01_condition(L: BoundedLattice, e: int, role: NormRole) -> ConditionResult:
    """
    Meet (t-norm role) or join (t-conorm role) restricted to I_e with bottom
    and top is a t-norm with neutral top (t-conorm with neutral bottom).
    """
    L.check_neutral(e)
    role = NormRole(role)
    ie = incomparables(L, e)
    domain = sorted(ie | {L.bottom, L.top})
    if role == NormRole.TNORM:
        condition, fn, neutral = ConditionId.MEET_NORM_ON_IE01, L.meet, L.top
    else:
        condition, fn, neutral = ConditionId.JOIN_CONORM_ON_IE01, L.join, L.bottom

    op = OpTable.from_function(L, domain, fn, neutral=neutral, name=fn.__name__)
    witnesses = scan_norm_axioms(L, op, domain, neutral)
    if witnesses:
        first = witnesses[0]
        return ConditionResult(condition=condition, holds=False, witness=first.elems, value=first.lhs,
                               branches=[first.axiom.value.lower()])
    return ConditionResult(condition=condition, holds=True, branches=["vacuous" if not ie else "closed"])


def p_set(L: BoundedLattice, e: int) -> ElemSet:
    """Elements strictly between bottom and ``e`` lying below some element of I_e."""
    L.check_neutral(e)
    ie = incomparables(L, e)
    open_low = interval(L, L.bottom, e, lower_closed=False, upper_closed=False)
    return frozenset(x for x in open_low if any(L.leq(x, y) for y in ie))


def p_annihilation_condition(L: BoundedLattice, e: int, T: OpTable, validate: bool = True) -> ConditionResult:
    """
    The t-norm ``T`` sends every pair from P x [0, e) and [0, e) x P to bottom,
    or P is empty.

    Raises:
        BadNeutral, SubOpInvalid
    """
    L.check_neutral(e)
    if validate:
        witnesses = check_norm_axioms(L, T, NormRole.TNORM, e)
        if witnesses:
            raise SubOpInvalid(NormRole.TNORM.value, witnesses)

    condition = ConditionId.P_ANNIHILATION
    P = sorted(p_set(L, e))
    if not P:
        return ConditionResult(condition=condition, holds=True, branches=["p_empty"])

    low = sorted(interval(L, L.bottom, e, upper_closed=False))
    for x in P:
        for y in low:
            for a, b in ((x, y), (y, x)):
                if T(a, b) != L.bottom:
                    return ConditionResult(condition=condition, holds=False,
                                           witness=(L.label(a), L.label(b)), value=L.label(T(a, b)),
                                           branches=["violation"])
    return ConditionResult(condition=condition, holds=True, branches=["p_annihilated"])


def ie_incomp_condition(L: BoundedLattice, e: int) -> ConditionResult:
    """Every element of I_e is incomparable with every element of (0, e]."""
    L.check_neutral(e)
    condition = ConditionId.IE_INCOMP_WITH_ZERO_E
    ie = incomparables(L, e)
    if not ie:
        return ConditionResult(condition=condition, holds=True, branches=["vacuous"])
    low = interval(L, L.bottom, e, lower_closed=False)
    pair = comparable_pair(L, low, ie)
    if pair is not None:
        return ConditionResult(condition=condition, holds=False,
                               witness=(L.label(pair[0]), L.label(pair[1])), branches=["violation"])
    return ConditionResult(condition=condition, holds=True, branches=["incomparable"])


def evaluate_conditions(L: BoundedLattice, e: int, T: Optional[OpTable] = None) -> Dict[ConditionId, ConditionResult]:
    """All six conditions at ``e``; ``T`` defaults to the meet t-norm."""
    T = T if T is not None else canonical_tnorm_meet(L, e)
    results: List[ConditionResult] = [
        meet_closure_condition(L, e),
        join_closure_condition(L, e),
        norm_on_ie01_condition(L, e, NormRole.TNORM),
        norm_on_ie01_condition(L, e, NormRole.TCONORM),
        p_annihilation_condition(L, e, T),
        ie_incomp_condition(L, e),
    ]
    return {result.condition: result for result in results}
