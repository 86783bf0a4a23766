"""
Canonical Forms

Isomorphism-invariant certificates for finite lattices: colour refinement on
down-set and up-set structure, then an exhaustive search over orderings that
respect the colour classes.
"""

import logging
from itertools import permutations, product
from typing import List, Tuple

import networkx as nx
import numpy as np

from ..core.lattice import BoundedLattice
from ..core.poset import cover_matrix

logger = logging.getLogger(__name__)


def _refine(leq: np.ndarray) -> List[int]:
    """Stable colour of every element; depends only on the order, never on labels."""
    n = len(leq)
    strict = leq & ~np.eye(n, dtype=bool)
    colours = [0] * n
    classes = 1
    while True:
        signatures = [
            (colours[x],
             tuple(sorted(colours[y] for y in np.flatnonzero(strict[:, x]))),
             tuple(sorted(colours[y] for y in np.flatnonzero(strict[x, :]))))
            for x in range(n)
        ]
        ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
        colours = [ranks[sig] for sig in signatures]
        if len(ranks) == classes:
            return colours
        classes = len(ranks)


def canonical_order(L: BoundedLattice) -> Tuple[int, ...]:
    """
    Ordering of the carrier whose permuted order matrix is minimal among all
    orderings consistent with the refined colour classes.
    """
    leq = L.leq_table
    colours = _refine(leq)
    groups = [
        [x for x in range(L.n) if colours[x] == c]
        for c in sorted(set(colours))
    ]
    best_key, best_order = None, None
    for arrangement in product(*(permutations(group) for group in groups)):
        order = [x for block in arrangement for x in block]
        key = np.packbits(leq[np.ix_(order, order)]).tobytes()
        if best_key is None or key < best_key:
            best_key, best_order = key, order
    return tuple(best_order)


def certificate(L: BoundedLattice) -> str:
    """Hex string equal for two lattices iff they are isomorphic."""
    order = list(canonical_order(L))
    bits = np.packbits(L.leq_table[np.ix_(order, order)]).tobytes()
    return f"{L.n}-{bits.hex()}"


def _hasse_graph(L: BoundedLattice) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(L.n))
    graph.add_edges_from(zip(*(idx.tolist() for idx in np.nonzero(cover_matrix(L.leq_table)))))
    return graph


def are_isomorphic(L1: BoundedLattice, L2: BoundedLattice) -> bool:
    """Order isomorphism by matching Hasse diagrams; independent of ``certificate``."""
    if L1.n != L2.n:
        return False
    return nx.is_isomorphic(_hasse_graph(L1), _hasse_graph(L2))
