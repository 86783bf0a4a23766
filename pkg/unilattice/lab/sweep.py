"""
Theorem Lab

Exhaustive verification that each characterization predicate agrees with the
brute-force uninorm verdict of its construction, over every enumerated
lattice, every neutral candidate and every sub-operation of the right role.
"""

import logging
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from ..algebra.norms import canonical_norm, drastic_norm, enumerate_norms, norm_domain
from ..algebra.optable import OpTable
from ..axioms import is_uninorm
from ..characterizations import (
    ie_incomp_condition,
    join_closure_condition,
    meet_closure_condition,
    p_annihilation_condition,
)
from ..cli.lattice_file import serialize_lattice
from ..config import HARD_LATTICE_CAP, get_settings
from ..constructions import construct
from ..core.lattice import BoundedLattice
from ..errors import CapExceeded, ConstructionConflict, RoleMismatch
from ..models.condition import ConditionId, ConditionResult
from ..models.construction import ConstructionKind
from ..models.operation import NormRole
from ..models.sweep import CaseRecord, Inconsistency, SweepReport, TheoremId, Verification
from .canonical import certificate
from .enumeration import enumerate_bounded_lattices

logger = logging.getLogger(__name__)


def neutral_candidates(L: BoundedLattice) -> List[int]:
    return [x for x in range(L.n) if x not in (L.bottom, L.top)]


def sub_operations(L: BoundedLattice, e: int, role: NormRole, norm_cap: Optional[int] = None) -> Tuple[List[OpTable], bool]:
    """
    Every norm of ``role`` at ``e`` when the interval is within ``norm_cap``,
    otherwise the canonical and drastic representatives.

    Returns:
        (tables, representative_only)
    """
    norm_cap = norm_cap if norm_cap is not None else get_settings().norm_domain_cap
    if len(norm_domain(L, e, role)) <= norm_cap:
        return list(enumerate_norms(L, e, role, cap=norm_cap)), False
    canonical, drastic = canonical_norm(L, e, role), drastic_norm(L, e, role)
    logger.warning(f"Interval at e={L.label(e)} on {L!r} exceeds {norm_cap}; using representatives only")
    return ([canonical] if canonical == drastic else [canonical, drastic]), True


def theorem_conditions(L: BoundedLattice, e: int, thm: TheoremId, sub_op: OpTable) -> List[ConditionResult]:
    checks = {
        ConditionId.MEET_CLOSURE: lambda: meet_closure_condition(L, e),
        ConditionId.JOIN_CLOSURE: lambda: join_closure_condition(L, e),
        ConditionId.P_ANNIHILATION: lambda: p_annihilation_condition(L, e, sub_op, validate=False),
        ConditionId.IE_INCOMP_WITH_ZERO_E: lambda: ie_incomp_condition(L, e),
    }
    return [checks[condition]() for condition in thm.conditions]


def _check_role(L: BoundedLattice, e: int, role: NormRole, sub_op: OpTable) -> None:
    if sub_op.domain == norm_domain(L, e, role):
        return
    other = NormRole.TCONORM if role == NormRole.TNORM else NormRole.TNORM
    actual = other.value if sub_op.domain == norm_domain(L, e, other) else "unknown"
    raise RoleMismatch(role.value, actual)


def verify_characterization(L: BoundedLattice, e: int, thm: TheoremId, sub_op: OpTable,
                            representative_only: bool = False, cert: Optional[str] = None) -> Verification:
    """
    Compare the structural predicate of ``thm`` with the uninorm status of its
    construction built from ``sub_op``.

    Raises:
        BadNeutral, RoleMismatch
    """
    thm = TheoremId(thm)
    L.check_neutral(e)
    _check_role(L, e, thm.kind.role, sub_op)

    conditions = theorem_conditions(L, e, thm, sub_op)
    predicted = all(result.holds for result in conditions)
    report = is_uninorm(L, construct(L, e, thm.kind, sub_op), e)
    observed = report.is_uninorm

    record = CaseRecord(
        certificate=cert or certificate(L), e=L.label(e), sub_op=f"{sub_op.name}#{sub_op.digest()}",
        theorem=thm, predicted=predicted, observed=observed, representative_only=representative_only,
    )
    inconsistency = None
    if predicted != observed:
        failing = [result.describe() for result in conditions if not result.holds]
        witnesses = [w.describe() for w in report.witnesses()]
        inconsistency = Inconsistency(
            lattice=serialize_lattice(L), e=L.label(e), sub_op=sub_op.serialize(L), theorem=thm,
            predicted=predicted, observed=observed, witness="; ".join(failing + witnesses) or None,
        )
        logger.warning(f"Inconsistent case {thm.value} on {L!r} at e={L.label(e)} with {sub_op.name}")
    return Verification(record=record, conditions=conditions, report=report, inconsistency=inconsistency)


class TheoremLab:
    """Runs every requested theorem on one lattice at a time and keeps running totals."""

    def __init__(self, theorems: Optional[Iterable[TheoremId]] = None, norm_cap: Optional[int] = None,
                 keep_records: bool = True):
        self.theorems = sorted(set(theorems or TheoremId), key=list(TheoremId).index)
        self.norm_cap = norm_cap
        self.keep_records = keep_records
        self.stats = {"lattices": 0, "cases": 0, "representative_only": 0, "inconsistencies": 0}

    def run_lattice(self, L: BoundedLattice) -> SweepReport:
        coverage: Dict[str, int] = {}
        records: List[CaseRecord] = []
        inconsistencies: List[Inconsistency] = []
        cases = representative = 0
        cert = certificate(L)

        for e in neutral_candidates(L):
            norms: Dict[NormRole, Tuple[List[OpTable], bool]] = {}
            for thm in self.theorems:
                role = thm.kind.role
                if role not in norms:
                    norms[role] = sub_operations(L, e, role, self.norm_cap)
                tables, rep_only = norms[role]
                for sub_op in tables:
                    verdict = verify_characterization(L, e, thm, sub_op, representative_only=rep_only, cert=cert)
                    cases += 1
                    representative += int(rep_only)
                    for result in verdict.conditions:
                        for branch in result.branches:
                            key = f"{thm.value}:{branch}"
                            coverage[key] = coverage.get(key, 0) + 1
                    if self.keep_records:
                        records.append(verdict.record)
                    if verdict.inconsistency is not None:
                        inconsistencies.append(verdict.inconsistency)

        self.stats["lattices"] += 1
        self.stats["cases"] += cases
        self.stats["representative_only"] += representative
        self.stats["inconsistencies"] += len(inconsistencies)
        return SweepReport(lattices_checked=1, cases_checked=cases, representative_only=representative,
                           inconsistencies=inconsistencies, coverage=coverage, records=records)

    def get_stats(self) -> Dict[str, int]:
        return self.stats.copy()


def _run_one(args) -> SweepReport:
    L, theorems, norm_cap, keep_records = args
    return TheoremLab(theorems, norm_cap, keep_records).run_lattice(L)


def check_lattice_cap(n_max: int, cap: Optional[int]) -> None:
    cap = min(cap if cap is not None else get_settings().lattice_cap, HARD_LATTICE_CAP)
    if n_max > cap:
        raise CapExceeded(n_max, cap)


def sweep(n_max: int, theorems: Optional[Iterable[TheoremId]] = None, jobs: Optional[int] = None,
          cap: Optional[int] = None, norm_cap: Optional[int] = None, keep_records: bool = True) -> SweepReport:
    """
    Verify every requested theorem on every lattice with at most ``n_max``
    elements. The report does not depend on ``jobs``.

    Raises:
        CapExceeded
    """
    check_lattice_cap(n_max, cap)
    theorems = sorted(set(theorems or TheoremId), key=list(TheoremId).index)
    jobs = jobs if jobs is not None else get_settings().jobs

    lattices = [L for n in range(1, n_max + 1) for L in enumerate_bounded_lattices(n, cap=HARD_LATTICE_CAP)]
    work = [(L, theorems, norm_cap, keep_records) for L in lattices]
    logger.info(f"Sweeping {len(lattices)} lattices up to n={n_max} on {jobs} worker(s)")

    if jobs > 1:
        with Pool(processes=jobs) as pool:
            parts = list(pool.imap(_run_one, work, chunksize=4))
    else:
        parts = [_run_one(item) for item in work]

    report = SweepReport()
    for part in parts:
        report = report.merge(part)
    logger.info(f"Sweep finished: {report.cases_checked} cases, {len(report.inconsistencies)} inconsistencies")
    return report


def legacy_checks(n_max: int, cap: Optional[int] = None) -> pd.DataFrame:
    """
    Census of the legacy constructions with the canonical sub-operations: for
    every lattice and neutral candidate, whether Ut_legacy conflicts at (0, e),
    whether Us_legacy conflicts at (e, 1) and whether US_legacy is a uninorm.
    """
    check_lattice_cap(n_max, cap)
    rows = []
    for n in range(1, n_max + 1):
        for L in enumerate_bounded_lattices(n, cap=HARD_LATTICE_CAP):
            cert = certificate(L)
            for e in neutral_candidates(L):
                low = (L.label(L.bottom), L.label(e))
                high = (L.label(e), L.label(L.top))
                ut_pairs = _conflict_pairs(L, e, ConstructionKind.Ut_legacy)
                us_pairs = _conflict_pairs(L, e, ConstructionKind.Us_legacy)
                us_legacy = construct(L, e, ConstructionKind.US_legacy, canonical_norm(L, e, NormRole.TCONORM))
                rows.append({
                    "n": n,
                    "certificate": cert,
                    "e": L.label(e),
                    "ut_conflict_0e": low in ut_pairs,
                    "us_conflict_e1": high in us_pairs,
                    "us_legacy_uninorm": is_uninorm(L, us_legacy, e).is_uninorm,
                })
    census = pd.DataFrame(rows, columns=["n", "certificate", "e", "ut_conflict_0e", "us_conflict_e1",
                                         "us_legacy_uninorm"])
    logger.info(f"Legacy census: {len(census)} cases, "
                f"{int((~census['us_legacy_uninorm']).sum()) if len(census) else 0} non-uninorm US_legacy tables")
    return census


def _conflict_pairs(L: BoundedLattice, e: int, kind: ConstructionKind) -> Sequence[Tuple[str, str]]:
    try:
        construct(L, e, kind, canonical_norm(L, e, kind.role))
    except ConstructionConflict as conflict:
        return [report.pair for report in conflict.conflicts]
    return []
