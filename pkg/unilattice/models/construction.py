"""
Construction Models
"""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict

from .operation import NormRole


class ConstructionKind(str, Enum):
    """The nine piecewise operations: four characterized, two extension-based, three legacy."""
    UT = "UT"
    US_corrected = "US_corrected"
    Ut_corrected = "Ut_corrected"
    Us_corrected = "Us_corrected"
    UTe = "UTe"
    USe = "USe"
    US_legacy = "US_legacy"
    Ut_legacy = "Ut_legacy"
    Us_legacy = "Us_legacy"

    @property
    def role(self) -> NormRole:
        if self in (ConstructionKind.UT, ConstructionKind.Ut_corrected,
                    ConstructionKind.Ut_legacy, ConstructionKind.UTe):
            return NormRole.TNORM
        return NormRole.TCONORM

    @property
    def is_legacy(self) -> bool:
        return self.value.endswith("_legacy")


class ConflictReport(BaseModel):
    """Two matching cases of an ill-defined display that disagree at one pair."""
    model_config = ConfigDict(frozen=True)

    pair: Tuple[str, str]
    case_a: str
    value_a: str
    case_b: str
    value_b: str

    def describe(self) -> str:
        x, y = self.pair
        return f"({x},{y}): case {self.case_a} gives {self.value_a}, case {self.case_b} gives {self.value_b}"
