"""
Condition Models
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ConditionId(str, Enum):
    MEET_CLOSURE = "MeetClosure"
    JOIN_CLOSURE = "JoinClosure"
    MEET_NORM_ON_IE01 = "MeetNormOnIe01"
    JOIN_CONORM_ON_IE01 = "JoinConormOnIe01"
    P_ANNIHILATION = "PAnnihilation"
    IE_INCOMP_WITH_ZERO_E = "IeIncompWithZeroE"


class ConditionResult(BaseModel):
    """Verdict of one structural condition, with a replayable witness on failure."""
    model_config = ConfigDict(frozen=True)

    condition: ConditionId
    holds: bool
    witness: Optional[Tuple[str, ...]] = Field(None, description="Offending elements")
    value: Optional[str] = Field(None, description="Offending value, when the condition is about a value")
    branches: List[str] = Field(default_factory=list, description="Clause branches that fired")

    @model_validator(mode="after")
    def witness_on_failure(self):
        if not self.holds and self.witness is None:
            raise ValueError(f"{self.condition.value} failed without a witness")
        return self

    def describe(self) -> str:
        if self.holds:
            return f"{self.condition.value}: holds [{', '.join(self.branches)}]"
        shown = ", ".join(self.witness or ())
        tail = f" -> {self.value}" if self.value is not None else ""
        return f"{self.condition.value}: fails at ({shown}){tail}"
