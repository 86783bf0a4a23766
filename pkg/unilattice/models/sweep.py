"""
Theorem Lab Models

Theorem tags, per-case records, sweep reports and counterexample records.
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, Field, computed_field

from .condition import ConditionId, ConditionResult
from .construction import ConflictReport, ConstructionKind
from .operation import AxiomWitness, UninormReport


class TheoremId(str, Enum):
    UT_char = "UT_char"
    US_char = "US_char"
    Ut_char = "Ut_char"
    Us_char = "Us_char"
    UTe_char = "UTe_char"
    USe_char = "USe_char"

    @property
    def kind(self) -> ConstructionKind:
        return THEOREM_KINDS[self]

    @property
    def conditions(self) -> Tuple[ConditionId, ...]:
        return THEOREM_CONDITIONS[self]


THEOREM_KINDS: Dict[TheoremId, ConstructionKind] = {
    TheoremId.UT_char: ConstructionKind.UT,
    TheoremId.US_char: ConstructionKind.US_corrected,
    TheoremId.Ut_char: ConstructionKind.Ut_corrected,
    TheoremId.Us_char: ConstructionKind.Us_corrected,
    TheoremId.UTe_char: ConstructionKind.UTe,
    TheoremId.USe_char: ConstructionKind.USe,
}

THEOREM_CONDITIONS: Dict[TheoremId, Tuple[ConditionId, ...]] = {
    TheoremId.UT_char: (ConditionId.JOIN_CLOSURE,),
    TheoremId.US_char: (ConditionId.MEET_CLOSURE,),
    TheoremId.Ut_char: (ConditionId.JOIN_CLOSURE,),
    TheoremId.Us_char: (ConditionId.MEET_CLOSURE,),
    TheoremId.UTe_char: (ConditionId.P_ANNIHILATION, ConditionId.MEET_CLOSURE),
    TheoremId.USe_char: (ConditionId.IE_INCOMP_WITH_ZERO_E,),
}


class CaseRecord(BaseModel):
    """One (lattice, e, sub-operation, theorem) verification case."""
    certificate: str
    e: str
    sub_op: str
    theorem: TheoremId
    predicted: bool
    observed: bool
    representative_only: bool = False

    @computed_field
    @property
    def consistent(self) -> bool:
        return self.predicted == self.observed


class Inconsistency(BaseModel):
    lattice: str = Field(..., description="Serialized .lat text of the lattice")
    e: str
    sub_op: str = Field(..., description="Serialized sub-operation table")
    theorem: TheoremId
    predicted: bool
    observed: bool
    witness: Optional[str] = None


class SweepReport(BaseModel):
    """Aggregated evidence that predicate verdicts match brute-force uninorm verdicts."""

    lattices_checked: int = 0
    cases_checked: int = 0
    representative_only: int = 0
    inconsistencies: List[Inconsistency] = Field(default_factory=list)
    coverage: Dict[str, int] = Field(default_factory=dict, description="Branch counters keyed 'theorem:branch'")
    records: List[CaseRecord] = Field(default_factory=list)

    @computed_field
    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def merge(self, other: "SweepReport") -> "SweepReport":
        coverage = dict(self.coverage)
        for key, count in other.coverage.items():
            coverage[key] = coverage.get(key, 0) + count
        return SweepReport(
            lattices_checked=self.lattices_checked + other.lattices_checked,
            cases_checked=self.cases_checked + other.cases_checked,
            representative_only=self.representative_only + other.representative_only,
            inconsistencies=self.inconsistencies + other.inconsistencies,
            coverage=coverage,
            records=self.records + other.records,
        )

    def to_frame(self) -> pd.DataFrame:
        columns = ["certificate", "e", "sub_op", "theorem", "predicted", "observed", "scope"]
        rows = [
            [r.certificate, r.e, r.sub_op, r.theorem.value, int(r.predicted), int(r.observed),
             "rep" if r.representative_only else "all"]
            for r in self.records
        ]
        return pd.DataFrame(rows, columns=columns)

    def to_tsv(self) -> str:
        return self.to_frame().to_csv(sep="\t", index=False, lineterminator="\n")

    def summary_lines(self) -> List[str]:
        lines = [
            f"lattices checked: {self.lattices_checked}",
            f"cases checked: {self.cases_checked}",
            f"representative-only cases: {self.representative_only}",
            f"inconsistencies: {len(self.inconsistencies)}",
        ]
        for key in sorted(self.coverage):
            lines.append(f"coverage {key}: {self.coverage[key]}")
        return lines


class Counterexample(BaseModel):
    """First instance where a construction breaks the targeted axiom or is ill-defined."""

    n: int
    lattice: str = Field(..., description="Serialized .lat text")
    e: str
    sub_op: str
    kind: ConstructionKind
    outcome: str = Field(..., pattern="^(axiom|conflict)$")
    witness: Optional[AxiomWitness] = None
    conflicts: List[ConflictReport] = Field(default_factory=list)


class Verification(BaseModel):
    """Predicate verdict against brute-force verdict for one case."""

    record: CaseRecord
    conditions: List[ConditionResult] = Field(default_factory=list)
    report: UninormReport
    inconsistency: Optional[Inconsistency] = None

    @computed_field
    @property
    def consistent(self) -> bool:
        return self.record.consistent
