import pytest

from unilattice.algebra import canonical_tconorm_join, canonical_tnorm_meet, drastic_tnorm, enumerate_norms
from unilattice.axioms import replay_witness
from unilattice.constructions import construct
from unilattice.core import incomparables, interval
from unilattice.errors import CapExceeded, RoleMismatch
from unilattice.lab import (
    TheoremLab,
    enumerate_bounded_lattices,
    legacy_checks,
    neutral_candidates,
    search_counterexample,
    sub_operations,
    sweep,
    verify_characterization,
)
from unilattice.models import Axiom, ConditionId, ConstructionKind, NormRole, SweepReport, TheoremId

from .conftest import chain, make_lattice


class TestVerifyCharacterization:

    def test_ut_on_ex3(self, ex3):
        e = ex3.index_of("e")
        verdict = verify_characterization(ex3, e, TheoremId.UT_char, canonical_tnorm_meet(ex3, e))
        assert (verdict.record.predicted, verdict.record.observed) == (True, True)
        assert verdict.consistent
        assert verdict.inconsistency is None

    def test_use_on_ex3(self, ex3):
        e = ex3.index_of("e")
        verdict = verify_characterization(ex3, e, TheoremId.USe_char, canonical_tconorm_join(ex3, e))
        assert (verdict.record.predicted, verdict.record.observed) == (False, False)
        assert verdict.report.monotone is not None

    def test_ute_with_meet_on_ex3(self, ex3):
        e = ex3.index_of("e")
        verdict = verify_characterization(ex3, e, TheoremId.UTe_char, canonical_tnorm_meet(ex3, e))
        assert (verdict.record.predicted, verdict.record.observed) == (False, False)

    def test_ute_with_drastic_needs_meet_closure(self, ex3):
        e = ex3.index_of("e")
        verdict = verify_characterization(ex3, e, TheoremId.UTe_char, drastic_tnorm(ex3, e))
        holds = {result.condition: result.holds for result in verdict.conditions}
        assert holds == {ConditionId.P_ANNIHILATION: True, ConditionId.MEET_CLOSURE: False}
        assert (verdict.record.predicted, verdict.record.observed) == (False, False)
        assert verdict.report.associative.elems == ("b", "b", "c")

    def test_ute_with_drastic_without_c(self, ex3_without_c):
        L = ex3_without_c
        e = L.index_of("e")
        verdict = verify_characterization(L, e, TheoremId.UTe_char, drastic_tnorm(L, e))
        assert (verdict.record.predicted, verdict.record.observed) == (True, True)

    def test_use_on_chains_below_e(self):
        L = chain(4)
        e = L.index_of("c2")
        for sub_op in enumerate_norms(L, e, NormRole.TCONORM):
            verdict = verify_characterization(L, e, TheoremId.USe_char, sub_op)
            assert (verdict.record.predicted, verdict.record.observed) == (True, True), verdict.report.witnesses()

    def test_use_with_incomparables_beside_zero_e(self):
        L = make_lattice("0 a e y 1", "0<a a<e e<1 0<y y<1")
        e = L.index_of("e")
        for sub_op in enumerate_norms(L, e, NormRole.TCONORM):
            verdict = verify_characterization(L, e, TheoremId.USe_char, sub_op)
            assert verdict.conditions[0].branches == ["incomparable"]
            assert (verdict.record.predicted, verdict.record.observed) == (True, True), verdict.report.witnesses()

    def test_role_mismatch(self, ex3):
        e = ex3.index_of("e")
        with pytest.raises(RoleMismatch) as exc:
            verify_characterization(ex3, e, TheoremId.UT_char, canonical_tconorm_join(ex3, e))
        assert (exc.value.expected, exc.value.actual) == ("TNorm", "TConorm")


class TestSweep:

    def test_chains_only(self):
        report = sweep(3)
        assert report.consistent
        assert report.lattices_checked == 3
        assert report.cases_checked == 6
        assert report.coverage["UT_char:vacuous"] == 1
        assert all(record.observed for record in report.records)

    def test_all_theorems_up_to_five(self):
        report = sweep(5)
        assert report.consistent, [item.model_dump() for item in report.inconsistencies]
        assert report.representative_only == 0
        assert report.lattices_checked == 10

    def test_meet_closure_branches_up_to_six(self):
        report = sweep(6, [TheoremId.US_char])
        assert report.consistent
        assert report.coverage["US_char:meet_zero"] > 0
        assert report.coverage["US_char:meet_in_ie"] > 0
        assert report.coverage["US_char:violation"] > 0

    @pytest.mark.slow
    def test_all_theorems_up_to_six(self):
        report = sweep(6, keep_records=False)
        assert report.consistent
        for key in ("UT_char:vacuous", "US_char:meet_zero", "US_char:meet_in_ie", "UT_char:join_top",
                    "UT_char:join_in_ie", "UTe_char:p_empty", "UTe_char:p_annihilated", "USe_char:incomparable"):
            assert report.coverage.get(key, 0) > 0, key

    def test_parallel_sweep_matches_serial(self):
        assert sweep(5, jobs=2) == sweep(5, jobs=1)

    def test_representatives_above_norm_cap(self):
        report = sweep(4, [TheoremId.UT_char], norm_cap=2)
        assert report.representative_only > 0
        assert report.consistent

    def test_cap(self):
        with pytest.raises(CapExceeded):
            sweep(9)
        with pytest.raises(CapExceeded):
            sweep(5, cap=4)

    def test_tsv(self):
        tsv = sweep(3).to_tsv()
        lines = tsv.splitlines()
        assert lines[0] == "certificate\te\tsub_op\ttheorem\tpredicted\tobserved\tscope"
        assert len(lines) == 7

    def test_lab_stats(self, ex3):
        lab = TheoremLab([TheoremId.UT_char])
        report = lab.run_lattice(ex3)
        assert lab.get_stats()["lattices"] == 1
        assert lab.get_stats()["cases"] == report.cases_checked > 0

    def test_merge(self):
        left = SweepReport(lattices_checked=1, cases_checked=2, coverage={"a": 1})
        right = SweepReport(lattices_checked=2, cases_checked=3, coverage={"a": 2, "b": 1})
        merged = left.merge(right)
        assert (merged.lattices_checked, merged.cases_checked) == (3, 5)
        assert merged.coverage == {"a": 3, "b": 1}


class TestLegacyCensus:

    def test_census(self):
        census = legacy_checks(5)
        assert census["ut_conflict_0e"].all()
        assert census["us_conflict_e1"].all()
        assert not census["us_legacy_uninorm"].all()
        assert census.loc[census["n"] == 4, "us_legacy_uninorm"].eq(False).any()
        assert census.loc[census["n"] == 3, "us_legacy_uninorm"].all()


class TestSearch:

    def test_legacy_us_first_fails_at_four(self):
        found = search_counterexample(5, ConstructionKind.US_legacy, Axiom.MONOTONICITY)
        assert found.n == 4
        assert found.outcome == "axiom"
        assert found.witness.axiom == Axiom.MONOTONICITY
        assert found.witness.elems[2] == "0"

    def test_legacy_us_witness_replays(self):
        from unilattice.cli.lattice_file import parse_lattice_file

        found = search_counterexample(5, ConstructionKind.US_legacy, Axiom.MONOTONICITY)
        L = parse_lattice_file(found.lattice)
        e = L.index_of(found.e)
        U = construct(L, e, ConstructionKind.US_legacy, canonical_tconorm_join(L, e))
        assert replay_witness(L, U, found.witness)

    def test_legacy_ut_is_ill_defined(self):
        found = search_counterexample(4, ConstructionKind.Ut_legacy, Axiom.ASSOCIATIVITY)
        assert found.outcome == "conflict"
        assert found.n == 3
        assert ("0", found.e) in [c.pair for c in found.conflicts]

    def test_ut_under_join_closure_has_no_counterexample(self):
        for axiom in (Axiom.ASSOCIATIVITY, Axiom.MONOTONICITY):
            assert search_counterexample(5, ConstructionKind.UT, axiom,
                                         restrict_to=[ConditionId.JOIN_CLOSURE]) is None

    def test_closure_is_not_searchable(self):
        with pytest.raises(ValueError):
            search_counterexample(3, ConstructionKind.UT, Axiom.CLOSURE)


def condition_reproduces(L, e, result, sub_op):
    """True iff the failing condition's witness exhibits the violation it names."""
    x, y = (L.index_of(label) for label in result.witness)
    ie = incomparables(L, e)
    if result.condition in (ConditionId.MEET_CLOSURE, ConditionId.JOIN_CLOSURE):
        meet = result.condition == ConditionId.MEET_CLOSURE
        v = L.meet(x, y) if meet else L.join(x, y)
        absorbing = L.bottom if meet else L.top
        return x in ie and y in ie and L.label(v) == result.value and v not in ie and v != absorbing
    if result.condition == ConditionId.P_ANNIHILATION:
        low = interval(L, L.bottom, e, upper_closed=False)
        in_p = [z for z in (x, y) if L.bottom != z and any(L.leq(z, w) for w in ie)]
        return x in low and y in low and bool(in_p) and sub_op(x, y) != L.bottom \
            and L.label(sub_op(x, y)) == result.value
    if result.condition == ConditionId.IE_INCOMP_WITH_ZERO_E:
        return x in interval(L, L.bottom, e, lower_closed=False) and y in ie and L.comparable(x, y)
    return False


class TestWitnessReplay:

    def test_every_witness_up_to_five_replays(self):
        for n in range(3, 6):
            for L in enumerate_bounded_lattices(n):
                for e in neutral_candidates(L):
                    for thm in TheoremId:
                        tables, _ = sub_operations(L, e, thm.kind.role)
                        for sub_op in tables:
                            verdict = verify_characterization(L, e, thm, sub_op)
                            assert verdict.consistent, verdict.inconsistency
                            U = construct(L, e, thm.kind, sub_op)
                            for w in verdict.report.witnesses():
                                assert replay_witness(L, U, w, neutral=e), w.describe()
                            for result in verdict.conditions:
                                if not result.holds:
                                    assert condition_reproduces(L, e, result, sub_op), result.describe()
