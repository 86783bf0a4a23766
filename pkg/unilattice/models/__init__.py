"""
Pydantic models for unilattice reports and records.
"""

from .lattice import ALL_REGION_PAIRS, CoordClass, Elem, RegionPair
from .operation import Axiom, AxiomWitness, NormRole, UninormReport
from .construction import ConflictReport, ConstructionKind
from .condition import ConditionId, ConditionResult
from .sweep import (
    CaseRecord,
    Counterexample,
    Inconsistency,
    SweepReport,
    TheoremId,
    Verification,
)

__all__ = [
    "ALL_REGION_PAIRS",
    "CoordClass",
    "Elem",
    "RegionPair",
    "Axiom",
    "AxiomWitness",
    "NormRole",
    "UninormReport",
    "ConflictReport",
    "ConstructionKind",
    "ConditionId",
    "ConditionResult",
    "CaseRecord",
    "Counterexample",
    "Inconsistency",
    "SweepReport",
    "TheoremId",
    "Verification",
]
