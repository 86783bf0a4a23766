"""
Counterexample Search

Walks lattices in enumeration order, smallest first, and reports the first
place where a construction breaks an axiom or cannot be built at all.
"""

import logging
from typing import Iterable, Optional

from ..axioms import check_axiom
from ..characterizations import evaluate_conditions
from ..cli.lattice_file import serialize_lattice
from ..config import HARD_LATTICE_CAP
from ..constructions import construct
from ..errors import ConstructionConflict
from ..models.condition import ConditionId
from ..models.construction import ConstructionKind
from ..models.operation import Axiom, NormRole
from ..models.sweep import Counterexample
from .enumeration import enumerate_bounded_lattices
from .sweep import check_lattice_cap, neutral_candidates, sub_operations

logger = logging.getLogger(__name__)


def search_counterexample(n_max: int, kind: ConstructionKind, axiom: Axiom,
                          restrict_to: Optional[Iterable[ConditionId]] = None,
                          cap: Optional[int] = None, norm_cap: Optional[int] = None) -> Optional[Counterexample]:
    """
    First (lattice, e, sub-operation) where ``kind`` violates ``axiom`` or is
    ill-defined, or None up to ``n_max``.

    Args:
        restrict_to: only consider cases where all these conditions hold

    Raises:
        CapExceeded
    """
    check_lattice_cap(n_max, cap)
    kind, axiom = ConstructionKind(kind), Axiom(axiom)
    if axiom == Axiom.CLOSURE:
        raise ValueError("Closure is a property of sub-operations, not of full tables")
    required = [ConditionId(c) for c in restrict_to or ()]

    for n in range(1, n_max + 1):
        for L in enumerate_bounded_lattices(n, cap=HARD_LATTICE_CAP):
            for e in neutral_candidates(L):
                tables, _ = sub_operations(L, e, kind.role, norm_cap)
                for sub_op in tables:
                    if required:
                        T = sub_op if kind.role == NormRole.TNORM else None
                        results = evaluate_conditions(L, e, T)
                        if not all(results[c].holds for c in required):
                            continue
                    found = _try_case(L, e, kind, axiom, sub_op, n)
                    if found is not None:
                        logger.info(f"Counterexample for {kind.value} at n={n}, e={L.label(e)}: {found.outcome}")
                        return found

    logger.info(f"No counterexample for {kind.value} / {axiom.value} up to n={n_max}")
    return None


def _try_case(L, e, kind, axiom, sub_op, n) -> Optional[Counterexample]:
    common = dict(n=n, lattice=serialize_lattice(L), e=L.label(e), sub_op=sub_op.serialize(L), kind=kind)
    try:
        U = construct(L, e, kind, sub_op)
    except ConstructionConflict as conflict:
        return Counterexample(outcome="conflict", conflicts=conflict.conflicts, **common)
    witness = check_axiom(L, U, axiom, e=e)
    if witness is not None:
        return Counterexample(outcome="axiom", witness=witness, **common)
    return None
