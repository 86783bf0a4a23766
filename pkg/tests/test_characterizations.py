import pytest

from unilattice.algebra import OpTable, canonical_tnorm_meet, drastic_tnorm, norm_domain
from unilattice.characterizations import (
    evaluate_conditions,
    ie_incomp_condition,
    join_closure_condition,
    meet_closure_condition,
    norm_on_ie01_condition,
    p_annihilation_condition,
    p_set,
)
from unilattice.errors import BadNeutral, SubOpInvalid
from unilattice.lab import enumerate_bounded_lattices, neutral_candidates
from unilattice.models import ConditionId, ConditionResult, NormRole


def labels(L, indices):
    return {L.label(i) for i in indices}


class TestClosure:

    def test_meet_closure_on_l1(self, l1):
        result = meet_closure_condition(l1, l1.index_of("e"))
        assert result.holds
        assert result.branches == ["meet_in_ie"]

    def test_vacuous_on_chain(self, chain4):
        for e in (1, 2):
            assert meet_closure_condition(chain4, e).branches == ["vacuous"]
            assert join_closure_condition(chain4, e).branches == ["vacuous"]

    def test_meet_closure_fails_on_ex3(self, ex3):
        result = meet_closure_condition(ex3, ex3.index_of("e"))
        assert not result.holds
        assert result.witness == ("b", "c")
        assert result.value == "a"

    def test_join_closure_on_ex3(self, ex3):
        result = join_closure_condition(ex3, ex3.index_of("e"))
        assert result.holds
        assert result.branches == ["join_in_ie", "join_top"]

    def test_join_closure_fails_when_joins_escape(self, join_escape):
        result = join_closure_condition(join_escape, join_escape.index_of("e"))
        assert (result.holds, result.witness, result.value) == (False, ("y", "z"), "w")

    def test_bad_neutral(self, ex3):
        with pytest.raises(BadNeutral):
            meet_closure_condition(ex3, ex3.top)

    def test_failure_requires_witness(self):
        with pytest.raises(ValueError):
            ConditionResult(condition=ConditionId.MEET_CLOSURE, holds=False)


class TestNormOnIncomparables:

    def test_join_role_on_ex3(self, ex3):
        result = norm_on_ie01_condition(ex3, ex3.index_of("e"), NormRole.TCONORM)
        assert result.holds
        assert result.branches == ["closed"]

    def test_meet_role_on_ex3(self, ex3):
        result = norm_on_ie01_condition(ex3, ex3.index_of("e"), NormRole.TNORM)
        assert not result.holds
        assert result.witness == ("b", "c")
        assert result.value == "a"
        assert result.branches == ["closure"]

    def test_two_element_domain(self, chain3):
        for role in NormRole:
            assert norm_on_ie01_condition(chain3, 1, role).branches == ["vacuous"]


class TestPConditions:

    def test_p_set(self, ex3, l1, chain4):
        assert labels(ex3, p_set(ex3, ex3.index_of("e"))) == {"a"}
        assert p_set(l1, l1.index_of("e")) == frozenset()
        assert p_set(chain4, 2) == frozenset()

    def test_meet_does_not_annihilate(self, ex3):
        e = ex3.index_of("e")
        result = p_annihilation_condition(ex3, e, canonical_tnorm_meet(ex3, e))
        assert (result.holds, result.witness, result.value) == (False, ("a", "a"), "a")

    def test_drastic_annihilates(self, ex3):
        e = ex3.index_of("e")
        result = p_annihilation_condition(ex3, e, drastic_tnorm(ex3, e))
        assert result.holds
        assert result.branches == ["p_annihilated"]

    def test_empty_p(self, l1):
        e = l1.index_of("e")
        assert p_annihilation_condition(l1, e, canonical_tnorm_meet(l1, e)).branches == ["p_empty"]

    def test_invalid_t_norm(self, ex3):
        e = ex3.index_of("e")
        domain = norm_domain(ex3, e, NormRole.TNORM)
        bogus = OpTable.from_function(ex3, domain, lambda x, y: e, neutral=e)
        with pytest.raises(SubOpInvalid):
            p_annihilation_condition(ex3, e, bogus)


class TestIncomparability:

    def test_ex3_fails(self, ex3):
        result = ie_incomp_condition(ex3, ex3.index_of("e"))
        assert not result.holds
        assert result.witness == ("a", "b")

    def test_diamond_holds(self, diamond):
        result = ie_incomp_condition(diamond, diamond.index_of("x"))
        assert result.holds
        assert result.branches == ["incomparable"]

    def test_vacuous(self, chain3):
        assert ie_incomp_condition(chain3, 1).branches == ["vacuous"]


class TestAllConditions:

    def test_evaluate_conditions(self, ex3):
        results = evaluate_conditions(ex3, ex3.index_of("e"))
        assert set(results) == set(ConditionId)
        assert results[ConditionId.JOIN_CLOSURE].holds
        assert not results[ConditionId.MEET_CLOSURE].holds

    def test_clause_equivalences_on_small_lattices(self):
        for n in range(3, 7):
            for L in enumerate_bounded_lattices(n):
                for e in neutral_candidates(L):
                    assert meet_closure_condition(L, e).holds == norm_on_ie01_condition(L, e, NormRole.TNORM).holds
                    assert join_closure_condition(L, e).holds == norm_on_ie01_condition(L, e, NormRole.TCONORM).holds
                    assert ie_incomp_condition(L, e).holds == (not p_set(L, e))
