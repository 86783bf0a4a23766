"""
Uninorm Constructions

Piecewise definitions of the nine candidate operations, compiled into
region-pair predicates over ``CoordClass`` tags. Non-legacy kinds have
pairwise disjoint cases; legacy kinds may overlap, and overlaps that disagree
are reported instead of being resolved by case order.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Tuple

import numpy as np

from .algebra.norms import check_norm_axioms
from .algebra.optable import OpTable
from .core.lattice import BoundedLattice, coord_classes
from .errors import ConflictAt, ConstructionConflict, SubOpInvalid
from .models.construction import ConflictReport, ConstructionKind
from .models.lattice import ALL_REGION_PAIRS, CoordClass, RegionPair

logger = logging.getLogger(__name__)

Region = FrozenSet[RegionPair]

_B, _E, _A, _I = CoordClass.BELOW, CoordClass.EQUAL, CoordClass.ABOVE, CoordClass.INCOMP
DOWN_CLOSED = (_B, _E)   # [0, e]
DOWN_OPEN = (_B,)        # [0, e)
UP_CLOSED = (_E, _A)     # [e, 1]
UP_OPEN = (_A,)          # (e, 1]
INCOMP = (_I,)           # I_e


class ValueRule(str, Enum):
    APPLY_SUB_OP = "applySubOp"
    TAKE_FIRST = "takeFirst"
    TAKE_SECOND = "takeSecond"
    MEET_OF = "meetOf"
    JOIN_OF = "joinOf"
    CONST_BOTTOM = "constBottom"
    CONST_TOP = "constTop"


@dataclass(frozen=True)
class Case:
    name: str
    region: Region
    rule: ValueRule


@dataclass(frozen=True)
class PiecewiseSpec:
    kind: ConstructionKind
    cases: Tuple[Case, ...]

    def matching(self, region: RegionPair) -> List[Case]:
        return [case for case in self.cases if region in case.region]

    def overlaps(self) -> List[Tuple[str, str, Region]]:
        """Pairs of cases whose regions intersect."""
        found = []
        for i, a in enumerate(self.cases):
            for b in self.cases[i + 1:]:
                common = a.region & b.region
                if common:
                    found.append((a.name, b.name, common))
        return found


def box(first: Iterable[CoordClass], second: Iterable[CoordClass]) -> Region:
    return frozenset(RegionPair(a, b) for a in first for b in second)


def symmetric_box(first: Iterable[CoordClass], second: Iterable[CoordClass]) -> Region:
    return box(first, second) | box(second, first)


def _compile(kind: ConstructionKind, displayed: List[Tuple[str, Region, ValueRule]],
             otherwise: ValueRule) -> PiecewiseSpec:
    cases = [Case(name, region, rule) for name, region, rule in displayed]
    covered = frozenset().union(*(case.region for case in cases))
    cases.append(Case("otherwise", frozenset(ALL_REGION_PAIRS) - covered, otherwise))
    spec = PiecewiseSpec(kind, tuple(cases))
    if not kind.is_legacy:
        assert not spec.overlaps(), f"{kind.value} cases overlap: {spec.overlaps()}"
    return spec


_R = ValueRule

_DISPLAYS: Dict[ConstructionKind, Tuple[List[Tuple[str, Region, ValueRule]], ValueRule]] = {
    ConstructionKind.UT: ([
        ("[0,e]^2", box(DOWN_CLOSED, DOWN_CLOSED), _R.APPLY_SUB_OP),
        ("(e,1]^2", box(UP_OPEN, UP_OPEN), _R.CONST_TOP),
        ("[0,e]xI_e", box(DOWN_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[0,e]", box(INCOMP, DOWN_CLOSED), _R.TAKE_FIRST),
    ], _R.JOIN_OF),
    ConstructionKind.US_legacy: ([
        ("[0,e)^2", box(DOWN_OPEN, DOWN_OPEN), _R.CONST_BOTTOM),
        ("[e,1]^2", box(UP_CLOSED, UP_CLOSED), _R.APPLY_SUB_OP),
        ("[0,e]xI_e", box(DOWN_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[0,e]", box(INCOMP, DOWN_CLOSED), _R.TAKE_FIRST),
    ], _R.MEET_OF),
    ConstructionKind.Ut_legacy: ([
        ("[0,e]^2", box(DOWN_CLOSED, DOWN_CLOSED), _R.APPLY_SUB_OP),
        ("A(e)uI_e^2", symmetric_box(DOWN_CLOSED, UP_CLOSED) | box(INCOMP, INCOMP), _R.JOIN_OF),
        ("[0,e]xI_e", box(DOWN_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[0,e]", box(INCOMP, DOWN_CLOSED), _R.TAKE_FIRST),
    ], _R.CONST_TOP),
    ConstructionKind.Us_legacy: ([
        ("[e,1]^2", box(UP_CLOSED, UP_CLOSED), _R.APPLY_SUB_OP),
        ("A(e)uI_e^2", symmetric_box(DOWN_CLOSED, UP_CLOSED) | box(INCOMP, INCOMP), _R.MEET_OF),
        ("[e,1]xI_e", box(UP_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[e,1]", box(INCOMP, UP_CLOSED), _R.TAKE_FIRST),
    ], _R.CONST_BOTTOM),
    ConstructionKind.US_corrected: ([
        ("[0,e)^2", box(DOWN_OPEN, DOWN_OPEN), _R.CONST_BOTTOM),
        ("[e,1]^2", box(UP_CLOSED, UP_CLOSED), _R.APPLY_SUB_OP),
        ("[e,1]xI_e", box(UP_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[e,1]", box(INCOMP, UP_CLOSED), _R.TAKE_FIRST),
    ], _R.MEET_OF),
    ConstructionKind.Ut_corrected: ([
        ("[0,e]^2", box(DOWN_CLOSED, DOWN_CLOSED), _R.APPLY_SUB_OP),
        ("[0,e]x(e,1]uI_e^2", symmetric_box(DOWN_CLOSED, UP_OPEN) | box(INCOMP, INCOMP), _R.JOIN_OF),
        ("[0,e]xI_e", box(DOWN_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[0,e]", box(INCOMP, DOWN_CLOSED), _R.TAKE_FIRST),
    ], _R.CONST_TOP),
    ConstructionKind.Us_corrected: ([
        ("[e,1]^2", box(UP_CLOSED, UP_CLOSED), _R.APPLY_SUB_OP),
        ("[0,e)x[e,1]uI_e^2", symmetric_box(DOWN_OPEN, UP_CLOSED) | box(INCOMP, INCOMP), _R.MEET_OF),
        ("[e,1]xI_e", box(UP_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[e,1]", box(INCOMP, UP_CLOSED), _R.TAKE_FIRST),
    ], _R.CONST_BOTTOM),
    # The displayed meet case runs over [0,e)x[e,1]; its column e already
    # belongs to [0,e]^2 where both rules give x, so it is encoded as (e,1].
    ConstructionKind.UTe: ([
        ("[0,e]^2", box(DOWN_CLOSED, DOWN_CLOSED), _R.APPLY_SUB_OP),
        ("[e,1]xI_e", box(UP_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[e,1]", box(INCOMP, UP_CLOSED), _R.TAKE_FIRST),
        ("[0,e)xI_e", symmetric_box(DOWN_OPEN, INCOMP), _R.CONST_BOTTOM),
        ("[0,e)x(e,1]uI_e^2", symmetric_box(DOWN_OPEN, UP_OPEN) | box(INCOMP, INCOMP), _R.MEET_OF),
    ], _R.JOIN_OF),
    # [0,e)^2 takes the meet, not the displayed join, so U(x,0) stays below
    # U(e,0)=0; the otherwise case is left empty.
    ConstructionKind.USe: ([
        ("[e,1]^2", box(UP_CLOSED, UP_CLOSED), _R.APPLY_SUB_OP),
        ("[0,e)^2", box(DOWN_OPEN, DOWN_OPEN), _R.MEET_OF),
        ("[e,1]xI_e", box(UP_CLOSED, INCOMP), _R.TAKE_SECOND),
        ("I_ex[e,1]", box(INCOMP, UP_CLOSED), _R.TAKE_FIRST),
        ("[0,e)xI_e", symmetric_box(DOWN_OPEN, INCOMP), _R.CONST_BOTTOM),
        ("[0,e)x[e,1]uI_e^2", symmetric_box(DOWN_OPEN, UP_CLOSED) | box(INCOMP, INCOMP), _R.MEET_OF),
    ], _R.JOIN_OF),
}

_SPECS: Dict[ConstructionKind, PiecewiseSpec] = {
    kind: _compile(kind, displayed, otherwise) for kind, (displayed, otherwise) in _DISPLAYS.items()
}


def piecewise_spec(kind: ConstructionKind) -> PiecewiseSpec:
    return _SPECS[ConstructionKind(kind)]


def _apply(L: BoundedLattice, rule: ValueRule, sub_op: OpTable, x: int, y: int) -> int:
    if rule == ValueRule.APPLY_SUB_OP:
        return sub_op(x, y)
    if rule == ValueRule.TAKE_FIRST:
        return x
    if rule == ValueRule.TAKE_SECOND:
        return y
    if rule == ValueRule.MEET_OF:
        return L.meet(x, y)
    if rule == ValueRule.JOIN_OF:
        return L.join(x, y)
    if rule == ValueRule.CONST_BOTTOM:
        return L.bottom
    return L.top


def _case_values(L: BoundedLattice, e: int, spec: PiecewiseSpec, sub_op: OpTable,
                 x: int, y: int) -> List[Tuple[Case, int]]:
    classes = coord_classes(L, e)
    region = RegionPair(classes[x], classes[y])
    return [(case, _apply(L, case.rule, sub_op, x, y)) for case in spec.matching(region)]


def audit_cases(L: BoundedLattice, e: int, kind: ConstructionKind) -> Dict[Tuple[int, int], List[str]]:
    """Names of the cases matching every pair of the carrier."""
    spec = piecewise_spec(kind)
    classes = coord_classes(L, e)
    return {
        (x, y): [case.name for case in spec.matching(RegionPair(classes[x], classes[y]))]
        for x in range(L.n) for y in range(L.n)
    }


def _validate_sub_op(L: BoundedLattice, e: int, kind: ConstructionKind, sub_op: OpTable) -> None:
    witnesses = check_norm_axioms(L, sub_op, kind.role, e)
    if witnesses:
        raise SubOpInvalid(kind.role.value, witnesses)


def evaluate(L: BoundedLattice, e: int, kind: ConstructionKind, sub_op: OpTable, x: int, y: int) -> int:
    """
    Value of the construction at ``(x, y)``.

    Raises:
        ConflictAt: two matching cases of a legacy display disagree at ``(x, y)``
    """
    L.check_neutral(e)
    matches = _case_values(L, e, piecewise_spec(kind), sub_op, x, y)
    values = {value for _, value in matches}
    if len(values) > 1:
        raise ConflictAt(L.label(x), L.label(y), [(case.name, L.label(value)) for case, value in matches])
    return matches[0][1]


def construct(L: BoundedLattice, e: int, kind: ConstructionKind, sub_op: OpTable,
              validate: bool = True) -> OpTable:
    """
    Build the full table of ``kind`` on ``L`` with neutral candidate ``e``.

    Args:
        sub_op: t-norm on [0, e] or t-conorm on [e, 1], per ``kind.role``
        validate: check ``sub_op`` against the norm axioms first

    Raises:
        BadNeutral, SubOpInvalid, DomainMismatch
        ConstructionConflict: overlapping legacy cases disagree (carries every ConflictReport)
    """
    kind = ConstructionKind(kind)
    L.check_neutral(e)
    if validate:
        _validate_sub_op(L, e, kind, sub_op)

    spec = piecewise_spec(kind)
    n = L.n
    values = np.zeros((n, n), dtype=np.int64)
    conflicts: List[ConflictReport] = []
    for x in range(n):
        for y in range(n):
            matches = _case_values(L, e, spec, sub_op, x, y)
            assert kind.is_legacy or len(matches) == 1, f"{kind.value} matched {len(matches)} cases at ({x}, {y})"
            (first, value), rest = matches[0], matches[1:]
            for case, other in rest:
                if other != value:
                    conflicts.append(ConflictReport(
                        pair=(L.label(x), L.label(y)),
                        case_a=first.name, value_a=L.label(value),
                        case_b=case.name, value_b=L.label(other),
                    ))
            values[x, y] = value

    if conflicts:
        logger.debug(f"{kind.value} on {L!r} with e={L.label(e)}: {len(conflicts)} conflicts")
        raise ConstructionConflict(kind.value, conflicts)
    return OpTable(range(n), values, neutral=e, name=kind.value)
