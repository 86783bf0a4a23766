"""
Rendering

Cayley tables as tab-separated grids and Hasse diagrams as DOT.
"""

from typing import Optional, Sequence

import networkx as nx
import pandas as pd

from ..algebra.optable import OpTable
from ..core.lattice import BoundedLattice
from ..core.poset import transitive_reduction
from ..errors import BadOrder


def cayley_frame(L: BoundedLattice, U: OpTable, order: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Labels of ``U`` in a frame indexed and columned by ``order`` (declared order by default)."""
    if order is None:
        order = [L.label(i) for i in L.declared_order if i in U.domain]
    order = list(order)
    expected = sorted(L.label(i) for i in U.domain)
    if sorted(order) != expected:
        raise BadOrder(order)
    idx = [L.index_of(label) for label in order]
    cells = [[L.label(U(x, y)) for y in idx] for x in idx]
    return pd.DataFrame(cells, index=order, columns=order)


def render_cayley_table(L: BoundedLattice, U: OpTable, order: Optional[Sequence[str]] = None,
                        corner: Optional[str] = None) -> str:
    """
    Tab-separated grid with a header row and column of labels; the corner
    cell holds the operation name.

    Raises:
        BadOrder: ``order`` is not a permutation of the operation's domain
    """
    frame = cayley_frame(L, U, order)
    return frame.to_csv(sep="\t", index_label=corner or U.name, lineterminator="\n")


def hasse_graph(L: BoundedLattice) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.graph["graph"] = {"rankdir": "BT"}
    graph.add_nodes_from(L.label(i) for i in L.declared_order)
    graph.add_edges_from(transitive_reduction(L.poset))
    return graph


def export_dot(L: BoundedLattice) -> str:
    """Hasse diagram of ``L`` in DOT, bottom drawn lowest."""
    return nx.nx_pydot.to_pydot(hasse_graph(L)).to_string()
