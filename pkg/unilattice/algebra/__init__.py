"""
Operations on sub-intervals: tables, norm axioms and enumeration.
"""

from .optable import UNDEFINED, OpTable
from .norms import (
    canonical_norm,
    canonical_tconorm_join,
    canonical_tnorm_meet,
    check_norm_axioms,
    drastic_norm,
    drastic_tconorm,
    drastic_tnorm,
    enumerate_norms,
    norm_domain,
    scan_norm_axioms,
)

__all__ = [
    "UNDEFINED",
    "OpTable",
    "canonical_norm",
    "canonical_tconorm_join",
    "canonical_tnorm_meet",
    "check_norm_axioms",
    "drastic_norm",
    "drastic_tconorm",
    "drastic_tnorm",
    "enumerate_norms",
    "norm_domain",
    "scan_norm_axioms",
]
