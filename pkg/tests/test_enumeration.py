from itertools import combinations, permutations

import numpy as np
import pytest

from unilattice.core import Poset, validate_bounded_lattice
from unilattice.errors import CapExceeded
from unilattice.lab import are_isomorphic, carrier_labels, certificate, enumerate_bounded_lattices

from .conftest import make_lattice

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}


def is_lattice(leq):
    """Bound scan: every pair has a unique greatest lower and least upper bound."""
    n = len(leq)
    for x in range(n):
        for y in range(n):
            lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
            upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
            if not any(all(leq[w][z] for w in lower) for z in lower):
                return False
            if not any(all(leq[z][w] for w in upper) for z in upper):
                return False
    return True


def naive_lattices(n):
    """All transitive upper-triangular orders on n points that are lattices, deduplicated by brute-force isomorphism."""
    pairs = list(combinations(range(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        leq = np.eye(n, dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                leq[i, j] = True
        if not Poset.is_partial_order(leq) or not is_lattice(leq):
            continue
        if any(leq.sum() == other.sum() and any(np.array_equal(leq, other[np.ix_(p, p)])
                                                 for p in map(list, permutations(range(n))))
               for other in found):
            continue
        found.append(leq)
    return found


def relabel(L, permutation):
    """Copy of L whose carrier is declared in the given order of its labels."""
    labels = [L.label(i) for i in permutation]
    covers = " ".join(f"{L.label(i)}<{L.label(j)}" for i in range(L.n) for j in range(L.n) if L.lt(i, j))
    return make_lattice(" ".join(labels), covers)


class TestEnumeration:

    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_counts(self, n, count):
        assert len(list(enumerate_bounded_lattices(n))) == count

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts_match_naive_oracle(self, n):
        assert len(list(enumerate_bounded_lattices(n))) == len(naive_lattices(n))

    def test_four_elements(self):
        shapes = sorted(int(L.leq_table.sum()) for L in enumerate_bounded_lattices(4))
        # diamond has 9 comparable pairs, the chain 10
        assert shapes == [9, 10]

    def test_deterministic_and_duplicate_free(self):
        for n in range(1, 7):
            first = [certificate(L) for L in enumerate_bounded_lattices(n)]
            second = [certificate(L) for L in enumerate_bounded_lattices(n)]
            assert first == second
            assert len(set(first)) == len(first)

    def test_labels(self):
        assert carrier_labels(1) == ["0"]
        assert carrier_labels(4) == ["0", "x1", "x2", "1"]
        assert list(enumerate_bounded_lattices(4))[0].labels == ("0", "x1", "x2", "1")

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_bounded_lattices(9))
        with pytest.raises(CapExceeded):
            list(enumerate_bounded_lattices(6, cap=5))


class TestCanonicalForm:

    @pytest.mark.parametrize("n", [4, 5])
    def test_certificates_agree_with_isomorphism(self, n):
        lattices = list(enumerate_bounded_lattices(n))
        for i, A in enumerate(lattices):
            for B in lattices[i:]:
                assert (certificate(A) == certificate(B)) == are_isomorphic(A, B)

    def test_relabelled_copies_share_a_certificate(self, ex3, l1):
        rng = np.random.default_rng(7)
        for L in [ex3, l1] + list(enumerate_bounded_lattices(6)):
            for _ in range(3):
                copy = relabel(L, rng.permutation(L.n).tolist())
                assert certificate(copy) == certificate(L)
                assert are_isomorphic(copy, L)

    def test_non_isomorphic_fixtures(self, ex3, l1, ex3_without_c):
        assert certificate(l1) != certificate(ex3_without_c)
        assert not are_isomorphic(l1, ex3_without_c)
        assert not are_isomorphic(l1, ex3)

    def test_singleton(self):
        L = validate_bounded_lattice(Poset(["0"], np.ones((1, 1), dtype=bool)))
        assert certificate(L) == certificate(list(enumerate_bounded_lattices(1))[0])
