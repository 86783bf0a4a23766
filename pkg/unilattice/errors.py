"""
Errors

Exception hierarchy shared by every layer of the toolkit. Each error keeps the
offending labels as attributes so callers can report them without parsing the
message.
"""

from typing import Iterable, List, Optional, Sequence, Tuple


class LatticeError(Exception):
    """Root of every error raised by unilattice."""


class DuplicateLabel(LatticeError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Duplicate element label: {label!r}")


def _at_line(line: Optional[int], message: str) -> str:
    return f"line {line}: {message}" if line is not None else message


class EmptyCarrier(LatticeError):
    def __init__(self):
        super().__init__("A poset needs at least one element")


class UnknownLabel(LatticeError):
    def __init__(self, label: str, where: str = "cover relation", line: Optional[int] = None):
        self.label = label
        self.where = where
        self.line = line
        super().__init__(_at_line(line, f"Unknown element label {label!r} in {where}"))


class CycleDetected(LatticeError):
    def __init__(self, cycle: Sequence[str], line: Optional[int] = None):
        self.cycle = list(cycle)
        self.line = line
        path = " < ".join(self.cycle + self.cycle[:1])
        super().__init__(_at_line(line, f"Cover relation contains a cycle: {path}"))


class NoMeet(LatticeError):
    def __init__(self, x: str, y: str, maximal_lower: Iterable[str]):
        self.pair = (x, y)
        self.bounds = sorted(maximal_lower)
        super().__init__(f"No greatest lower bound for ({x}, {y}); maximal lower bounds: {self.bounds}")


class NoJoin(LatticeError):
    def __init__(self, x: str, y: str, minimal_upper: Iterable[str]):
        self.pair = (x, y)
        self.bounds = sorted(minimal_upper)
        super().__init__(f"No least upper bound for ({x}, {y}); minimal upper bounds: {self.bounds}")


class NotBounded(LatticeError):
    def __init__(self, minimal: Iterable[str], maximal: Iterable[str]):
        self.minimal = sorted(minimal)
        self.maximal = sorted(maximal)
        super().__init__(f"Poset is not bounded: minimal elements {self.minimal}, maximal elements {self.maximal}")


class NotComparable(LatticeError):
    def __init__(self, a: str, b: str):
        self.pair = (a, b)
        super().__init__(f"Interval endpoints are not ordered: {a} is not below {b}")


class BadNeutral(LatticeError):
    def __init__(self, e: str):
        self.e = e
        super().__init__(f"Neutral candidate must lie strictly between bottom and top, got {e!r}")


class DomainMismatch(LatticeError):
    def __init__(self, expected: Iterable[str], actual: Iterable[str]):
        self.expected = sorted(expected)
        self.actual = sorted(actual)
        super().__init__(f"Operation domain {self.actual} does not match required interval {self.expected}")


class DomainTooLarge(LatticeError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"Interval has {size} elements; enumeration cap is {cap}")


class SubOpInvalid(LatticeError):
    def __init__(self, role: str, witnesses: List[object]):
        self.role = role
        self.witnesses = witnesses
        first = witnesses[0] if witnesses else None
        super().__init__(f"Sub-operation is not a valid {role}; first violation: {first}")


class ConstructionConflict(LatticeError):
    """Overlapping piecewise cases disagree; carries every ConflictReport."""

    def __init__(self, kind: str, conflicts: List[object]):
        self.kind = kind
        self.conflicts = conflicts
        super().__init__(f"{kind} is ill-defined: {len(conflicts)} conflicting pair(s)")


class ConflictAt(LatticeError):
    def __init__(self, x: str, y: str, values: Sequence[Tuple[str, str]]):
        self.pair = (x, y)
        self.values = list(values)
        super().__init__(f"Cases disagree at ({x}, {y}): {self.values}")


class MissingNeutralParam(LatticeError):
    def __init__(self):
        super().__init__("Neutrality check requires a neutral element")


class RoleMismatch(LatticeError):
    def __init__(self, expected: str, actual: str):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Sub-operation role {actual} does not match required role {expected}")


class CapExceeded(LatticeError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"Requested size {n} exceeds enumeration cap {cap}")


class LatticeFileSyntaxError(LatticeError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class BoundMismatch(LatticeError):
    def __init__(self, which: str, declared: str, computed: str):
        self.which = which
        self.declared = declared
        self.computed = computed
        super().__init__(f"Declared {which} {declared!r} but the order has {which} {computed!r}")


class BadOrder(LatticeError):
    def __init__(self, order: Optional[Sequence[str]] = None):
        self.order = list(order or [])
        super().__init__(f"Row order is not a permutation of the carrier: {self.order}")
