"""
Triangular Norms on Sub-intervals

Axiom checks for t-norms on [0, e] and t-conorms on [e, 1], the canonical
and drastic representatives, and exhaustive enumeration of every norm on a
small interval.
"""

import logging
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..core.lattice import BoundedLattice, interval
from ..errors import DomainMismatch, DomainTooLarge
from ..models.operation import Axiom, AxiomWitness, NormRole
from .optable import OpTable

logger = logging.getLogger(__name__)


def norm_domain(L: BoundedLattice, e: int, role: NormRole) -> Tuple[int, ...]:
    """``[0, e]`` for t-norms, ``[e, 1]`` for t-conorms, in index order."""
    if role == NormRole.TNORM:
        return tuple(sorted(interval(L, L.bottom, e)))
    return tuple(sorted(interval(L, e, L.top)))


def check_norm_axioms(L: BoundedLattice, op: OpTable, role: NormRole, e: int) -> List[AxiomWitness]:
    """
    Check that ``op`` is a t-norm (t-conorm) on its interval with neutral ``e``.

    Returns:
        One witness per violated axiom; empty when ``op`` is valid.

    Raises:
        DomainMismatch: ``op.domain`` is not the interval required by ``role``
    """
    required = norm_domain(L, e, role)
    if op.domain != required:
        raise DomainMismatch([L.label(i) for i in required], [L.label(i) for i in op.domain])
    return scan_norm_axioms(L, op, required, e)


def scan_norm_axioms(L: BoundedLattice, op: OpTable, domain: Sequence[int], neutral: int) -> List[AxiomWitness]:
    """
    First witness of each violated axiom of ``op`` on an arbitrary sub-domain.

    Order of the checks is Closure, Commutativity, Associativity, Monotonicity,
    Neutrality; scans follow index order so witnesses are deterministic.
    """
    domain = tuple(sorted(domain))
    members = set(domain)
    lab = L.label
    witnesses: List[AxiomWitness] = []

    for x, y in product(domain, repeat=2):
        v = op(x, y)
        if v not in members:
            witnesses.append(AxiomWitness(axiom=Axiom.CLOSURE, elems=(lab(x), lab(y)),
                                          lhs=lab(v) if v >= 0 else "undefined"))
            break

    for x, y in product(domain, repeat=2):
        if op(x, y) != op(y, x):
            witnesses.append(AxiomWitness(axiom=Axiom.COMMUTATIVITY, elems=(lab(x), lab(y)),
                                          lhs=lab(op(x, y)), rhs=lab(op(y, x))))
            break

    for x, y, z in product(domain, repeat=3):
        yz, xy = op(y, z), op(x, y)
        if yz not in members or xy not in members:
            continue
        left, right = op(x, yz), op(xy, z)
        if left != right:
            witnesses.append(AxiomWitness(axiom=Axiom.ASSOCIATIVITY, elems=(lab(x), lab(y), lab(z)),
                                          lhs=lab(left), rhs=lab(right)))
            break

    monotone = _first_monotonicity_violation(L, op, domain)
    if monotone is not None:
        witnesses.append(monotone)

    for x in domain:
        if op(neutral, x) != x:
            witnesses.append(AxiomWitness(axiom=Axiom.NEUTRALITY, elems=(lab(x),),
                                          lhs=lab(op(neutral, x)), rhs=lab(x)))
            break

    return witnesses


def _first_monotonicity_violation(L: BoundedLattice, op: OpTable, domain: Sequence[int]) -> Optional[AxiomWitness]:
    lab = L.label
    for x, y in product(domain, repeat=2):
        if not L.lt(x, y):
            continue
        for z in domain:
            checks = ((op(x, z), op(y, z), 0), (op(z, x), op(z, y), 1))
            for left, right, position in checks:
                if left >= 0 and right >= 0 and not L.leq(left, right):
                    return AxiomWitness(axiom=Axiom.MONOTONICITY, elems=(lab(x), lab(y), lab(z)),
                                        lhs=lab(left), rhs=lab(right), position=position)
    return None


def canonical_tnorm_meet(L: BoundedLattice, e: int) -> OpTable:
    L.check_neutral(e)
    return OpTable.from_function(L, norm_domain(L, e, NormRole.TNORM), L.meet, neutral=e, name="meet")


def canonical_tconorm_join(L: BoundedLattice, e: int) -> OpTable:
    L.check_neutral(e)
    return OpTable.from_function(L, norm_domain(L, e, NormRole.TCONORM), L.join, neutral=e, name="join")


def drastic_tnorm(L: BoundedLattice, e: int) -> OpTable:
    """Least t-norm on [0, e]: the meet when one argument is e, bottom otherwise."""
    L.check_neutral(e)

    def rule(x: int, y: int) -> int:
        return L.meet(x, y) if e in (x, y) else L.bottom

    return OpTable.from_function(L, norm_domain(L, e, NormRole.TNORM), rule, neutral=e, name="drastic")


def drastic_tconorm(L: BoundedLattice, e: int) -> OpTable:
    """Greatest t-conorm on [e, 1]: the join when one argument is e, top otherwise."""
    L.check_neutral(e)

    def rule(x: int, y: int) -> int:
        return L.join(x, y) if e in (x, y) else L.top

    return OpTable.from_function(L, norm_domain(L, e, NormRole.TCONORM), rule, neutral=e, name="drastic")


def canonical_norm(L: BoundedLattice, e: int, role: NormRole) -> OpTable:
    return canonical_tnorm_meet(L, e) if role == NormRole.TNORM else canonical_tconorm_join(L, e)


def drastic_norm(L: BoundedLattice, e: int, role: NormRole) -> OpTable:
    return drastic_tnorm(L, e) if role == NormRole.TNORM else drastic_tconorm(L, e)


def enumerate_norms(L: BoundedLattice, e: int, role: NormRole, cap: Optional[int] = None) -> Iterator[OpTable]:
    """
    Yield every t-norm (t-conorm) on the interval of ``role`` exactly once.

    Backtracks over the upper triangle of a symmetric table in row-major order
    with neutrality pinned and monotonicity bounds applied cell by cell;
    associativity is filtered on complete tables. Candidates are tried in
    index order, so output is lexicographic in the flattened table.

    Raises:
        DomainTooLarge: the interval exceeds ``cap`` (default from settings)
    """
    L.check_neutral(e)
    cap = cap if cap is not None else get_settings().norm_domain_cap
    domain = norm_domain(L, e, role)
    if len(domain) > cap:
        raise DomainTooLarge(len(domain), cap)

    if role == NormRole.TNORM:
        def admissible(x: int, y: int) -> List[int]:
            bound = L.meet(x, y)
            return [v for v in domain if L.leq(v, bound)]
    else:
        def admissible(x: int, y: int) -> List[int]:
            bound = L.join(x, y)
            return [v for v in domain if L.leq(bound, v)]

    cells = [(x, y) for i, x in enumerate(domain) for y in domain[i:]]
    choices = []
    for x, y in cells:
        if x == e:
            choices.append([y])
        elif y == e:
            choices.append([x])
        else:
            choices.append(admissible(x, y))

    table: Dict[Tuple[int, int], int] = {}
    found = 0

    def consistent(x: int, y: int, v: int) -> bool:
        for (a, b), w in table.items():
            if L.leq(a, x) and L.leq(b, y) and not L.leq(w, v):
                return False
            if L.leq(x, a) and L.leq(y, b) and not L.leq(v, w):
                return False
        return True

    def associative() -> bool:
        for x, y, z in product(domain, repeat=3):
            if table[(x, table[(y, z)])] != table[(table[(x, y)], z)]:
                return False
        return True

    def backtrack(k: int) -> Iterator[OpTable]:
        nonlocal found
        if k == len(cells):
            if associative():
                found += 1
                yield OpTable.from_function(L, domain, lambda a, b: table[(a, b)], neutral=e,
                                            name=f"index:{found - 1}")
            return
        x, y = cells[k]
        for v in choices[k]:
            if consistent(x, y, v):
                table[(x, y)] = table[(y, x)] = v
                yield from backtrack(k + 1)
                del table[(x, y)]
                table.pop((y, x), None)

    yield from backtrack(0)
    logger.debug(f"Enumerated {found} {role.value} tables on an interval of {len(domain)} elements")
