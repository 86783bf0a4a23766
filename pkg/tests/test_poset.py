import numpy as np
import pytest

from unilattice.core import Poset, build_poset, cover_matrix, transitive_reduction
from unilattice.errors import CycleDetected, DuplicateLabel, EmptyCarrier, LatticeError, UnknownLabel


L1_COVERS = [("0", "e"), ("e", "a"), ("a", "1"), ("0", "b"), ("b", "a")]


class TestBuildPoset:

    def test_linear_extension_uses_declaration_order_as_tie_break(self):
        p = build_poset(["0", "e", "a", "b", "1"], L1_COVERS)
        assert p.labels == ("0", "e", "b", "a", "1")
        assert [p.labels[i] for i in p.declared_order] == ["0", "e", "a", "b", "1"]

    def test_order_is_upper_triangular_and_closed(self):
        p = build_poset(["0", "e", "a", "b", "1"], L1_COVERS)
        assert not np.tril(p.leq, -1).any()
        assert p.leq[p.index_of("0"), p.index_of("1")]
        assert p.leq[p.index_of("b"), p.index_of("1")]
        assert not p.leq[p.index_of("e"), p.index_of("b")]
        assert Poset.is_partial_order(p.leq)

    def test_empty_carrier(self):
        with pytest.raises(EmptyCarrier) as exc:
            build_poset([], [])
        assert isinstance(exc.value, LatticeError)

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabel) as exc:
            build_poset(["0", "a", "0"], [])
        assert exc.value.label == "0"

    def test_unknown_label(self):
        with pytest.raises(UnknownLabel) as exc:
            build_poset(["0", "1"], [("0", "z")])
        assert exc.value.label == "z"

    def test_cycle(self):
        with pytest.raises(CycleDetected) as exc:
            build_poset(["0", "a", "1"], [("0", "a"), ("a", "1"), ("1", "a")])
        assert set(exc.value.cycle) == {"a", "1"}

    def test_self_cover_is_a_cycle(self):
        with pytest.raises(CycleDetected):
            build_poset(["0", "1"], [("0", "0")])

    def test_index_of_unknown(self):
        p = build_poset(["0"], [])
        with pytest.raises(UnknownLabel):
            p.index_of("x")


class TestCovers:

    def test_transitive_reduction_in_declared_order(self):
        p = build_poset(["0", "e", "a", "b", "1"], L1_COVERS)
        assert transitive_reduction(p) == [("0", "e"), ("0", "b"), ("e", "a"), ("a", "1"), ("b", "a")]

    def test_redundant_cover_is_dropped(self):
        p = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1"), ("0", "1")])
        assert transitive_reduction(p) == [("0", "m"), ("m", "1")]

    def test_cover_matrix_of_chain(self):
        leq = np.triu(np.ones((4, 4), dtype=bool))
        covers = cover_matrix(leq)
        assert [tuple(pair) for pair in np.argwhere(covers)] == [(0, 1), (1, 2), (2, 3)]

    def test_is_partial_order_rejects_non_transitive(self):
        leq = np.eye(3, dtype=bool)
        leq[0, 1] = leq[1, 2] = True
        assert not Poset.is_partial_order(leq)
