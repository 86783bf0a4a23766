"""
Posets

Finite partial orders built from cover relations. The order is stored as a
dense read-only boolean matrix over a fixed linear extension: element ``i``
can only be below elements with index ``>= i``.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import CycleDetected, DuplicateLabel, EmptyCarrier, UnknownLabel
from ..models.lattice import Elem

logger = logging.getLogger(__name__)


class Poset:
    """
    Immutable finite partial order.

    Attributes:
        labels: element labels in linear-extension order (``labels[i]`` has index ``i``)
        leq: read-only ``n x n`` boolean matrix, ``leq[i, j]`` iff ``i <= j``
        declared_order: indices in the order the elements were declared
    """

    def __init__(self, labels: Sequence[str], leq: np.ndarray, declared_order: Sequence[int] = None):
        n = len(labels)
        assert leq.dtype == bool and leq.shape == (n, n), f"leq must be a boolean {n}x{n} matrix"
        leq = leq.copy()
        leq.flags.writeable = False
        self.labels: Tuple[str, ...] = tuple(labels)
        self.leq = leq
        self.declared_order: Tuple[int, ...] = tuple(range(n) if declared_order is None else declared_order)
        self._index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def elems(self) -> List[Elem]:
        return [Elem(label, i) for i, label in enumerate(self.labels)]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label, "carrier") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def __repr__(self) -> str:
        return f"Poset({' '.join(self.labels)})"

    @staticmethod
    def is_partial_order(leq: np.ndarray) -> bool:
        """Reflexive, antisymmetric and transitive check of a boolean matrix."""
        if not leq.diagonal().all():
            return False
        off_diagonal = leq & ~np.eye(len(leq), dtype=bool)
        if (off_diagonal & off_diagonal.T).any():
            return False
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        return bool((composed <= leq).all())


def build_poset(labels: Sequence[str], covers: Iterable[Tuple[str, str]]) -> Poset:
    """
    Build a poset from element labels and a (possibly non-reduced) cover relation.

    Args:
        labels: distinct element labels, in declaration order
        covers: pairs ``(x, y)`` meaning ``x < y``

    Returns:
        Poset whose order is the reflexive-transitive closure of ``covers``

    Raises:
        EmptyCarrier, DuplicateLabel, UnknownLabel, CycleDetected
    """
    labels = list(labels)
    if not labels:
        raise EmptyCarrier()
    position: Dict[str, int] = {}
    for label in labels:
        if label in position:
            raise DuplicateLabel(label)
        position[label] = len(position)

    graph = nx.DiGraph()
    graph.add_nodes_from(labels)
    for lower, upper in covers:
        for label in (lower, upper):
            if label not in position:
                raise UnknownLabel(label)
        if lower == upper:
            raise CycleDetected([lower])
        graph.add_edge(lower, upper)

    try:
        cycle = nx.find_cycle(graph)
        raise CycleDetected([u for u, _ in cycle])
    except nx.NetworkXNoCycle:
        pass

    # Linear extension with declaration order as tie-break; this fixes element indices.
    order = list(nx.lexicographical_topological_sort(graph, key=position.__getitem__))
    index = {label: i for i, label in enumerate(order)}
    leq = np.eye(len(order), dtype=bool)
    for lower, upper in nx.transitive_closure_dag(graph).edges:
        leq[index[lower], index[upper]] = True

    logger.debug(f"Built poset on {len(order)} elements with {graph.number_of_edges()} cover pairs")
    return Poset(order, leq, [index[label] for label in labels])


def cover_matrix(leq: np.ndarray) -> np.ndarray:
    """Boolean matrix of the cover relation (transitive reduction of the strict order)."""
    lt = leq & ~np.eye(len(leq), dtype=bool)
    between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    return lt & ~between


def transitive_reduction(p: Poset) -> List[Tuple[str, str]]:
    """Cover pairs of ``p`` ordered by the declaration order of both endpoints."""
    covers = cover_matrix(p.leq)
    rank = {i: r for r, i in enumerate(p.declared_order)}
    pairs = sorted(zip(*np.nonzero(covers)), key=lambda ij: (rank[ij[0]], rank[ij[1]]))
    return [(p.labels[i], p.labels[j]) for i, j in pairs]
