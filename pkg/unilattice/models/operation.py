"""
Operation Models

Roles of sub-interval operations, axiom tags, witnesses and the aggregate
uninorm report.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field


class NormRole(str, Enum):
    TNORM = "TNorm"
    TCONORM = "TConorm"


class Axiom(str, Enum):
    COMMUTATIVITY = "Commutativity"
    ASSOCIATIVITY = "Associativity"
    MONOTONICITY = "Monotonicity"
    NEUTRALITY = "Neutrality"
    CLOSURE = "Closure"


class AxiomWitness(BaseModel):
    """A concrete violation of one axiom instance."""
    model_config = ConfigDict(frozen=True)

    axiom: Axiom
    elems: Tuple[str, ...] = Field(..., min_length=1, max_length=3, description="Elements instantiating the axiom")
    lhs: str = Field(..., description="Left-hand value of the violated (in)equality")
    rhs: Optional[str] = Field(None, description="Right-hand value; absent for Closure")
    position: int = Field(0, ge=0, le=1, description="Argument position for Monotonicity (0 first, 1 second)")

    def describe(self) -> str:
        if self.axiom == Axiom.COMMUTATIVITY:
            x, y = self.elems
            return f"U({x},{y})={self.lhs} but U({y},{x})={self.rhs}"
        if self.axiom == Axiom.ASSOCIATIVITY:
            x, y, z = self.elems
            return f"U({x},U({y},{z}))={self.lhs} but U(U({x},{y}),{z})={self.rhs}"
        if self.axiom == Axiom.MONOTONICITY:
            x, y, z = self.elems
            if self.position == 0:
                return f"{x}<={y} but U({x},{z})={self.lhs} is not below U({y},{z})={self.rhs}"
            return f"{x}<={y} but U({z},{x})={self.lhs} is not below U({z},{y})={self.rhs}"
        if self.axiom == Axiom.NEUTRALITY:
            (x,) = self.elems
            return f"U(e,{x})={self.lhs} but expected {self.rhs}"
        x, y = self.elems
        return f"U({x},{y})={self.lhs} escapes the domain"


class UninormReport(BaseModel):
    """Outcome of checking the four uninorm axioms on a full carrier."""

    commutative: Optional[AxiomWitness] = None
    associative: Optional[AxiomWitness] = None
    monotone: Optional[AxiomWitness] = None
    neutral: Optional[AxiomWitness] = None
    unchecked: List[Axiom] = Field(default_factory=list, description="Axioms skipped after a short-circuit")

    @computed_field
    @property
    def is_uninorm(self) -> bool:
        return not self.unchecked and all(
            w is None for w in (self.commutative, self.associative, self.monotone, self.neutral)
        )

    def witnesses(self) -> List[AxiomWitness]:
        return [w for w in (self.commutative, self.associative, self.monotone, self.neutral) if w is not None]
