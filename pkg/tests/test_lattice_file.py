import pytest

from unilattice.cli.lattice_file import load_fixture, parse_lattice_file, read_lattice_file, serialize_lattice
from unilattice.errors import BoundMismatch, CycleDetected, LatticeFileSyntaxError, UnknownLabel
from unilattice.lab import enumerate_bounded_lattices


class TestParse:

    def test_l1_fixture(self):
        L, parsed = load_fixture("l1")
        assert L.n == 5
        assert parsed.neutral == "e"
        e = L.index_of("e")
        assert [L.label(x) for x in range(L.n) if not L.comparable(x, e)] == ["b"]

    def test_ex3_fixture(self):
        L, parsed = load_fixture("ex3.lat")
        assert parsed.labels == ["0", "a", "b", "c", "e", "1"]
        assert L.label(L.join(L.index_of("b"), L.index_of("c"))) == "1"

    def test_comments_and_blank_lines(self):
        L = parse_lattice_file("# chain\n\nelements: 0 m 1  # three\ncovers: 0<m m<1\n")
        assert L.labels == ("0", "m", "1")

    def test_cycle_reports_its_line(self):
        with pytest.raises(CycleDetected) as exc:
            parse_lattice_file("elements: 0 1\ncovers: 0<1 1<0\n")
        assert exc.value.line == 2
        assert str(exc.value).startswith("line 2: ")

    def test_unknown_label_in_covers(self):
        with pytest.raises(UnknownLabel) as exc:
            parse_lattice_file("elements: 0 1\ncovers: 0<2\n")
        assert exc.value.line == 2
        assert "line 2" in str(exc.value)

    def test_malformed_cover_position(self):
        with pytest.raises(LatticeFileSyntaxError) as exc:
            parse_lattice_file("elements: 0 1\ncovers: 0<1 1>0\n")
        assert (exc.value.line, exc.value.column) == (2, 13)

    @pytest.mark.parametrize("text", [
        "elements: 0 1\nshape: square\n",
        "elements: 0 1\nelements: 0 1\n",
        "covers: 0<1\n",
        "elements: 0 1\nbottom: 0 1\n",
        "elements 0 1\n",
    ])
    def test_syntax_errors(self, text):
        with pytest.raises(LatticeFileSyntaxError):
            read_lattice_file(text)

    def test_declared_bounds_must_match(self):
        with pytest.raises(BoundMismatch) as exc:
            parse_lattice_file("elements: 0 m 1\ncovers: 0<m m<1\nbottom: m\n")
        assert (exc.value.which, exc.value.declared, exc.value.computed) == ("bottom", "m", "0")


class TestSerialize:

    def test_l1_text(self):
        L, _ = load_fixture("l1")
        assert serialize_lattice(L) == "elements: 0 e a b 1\ncovers: 0<e 0<b e<a a<1 b<a\nbottom: 0\ntop: 1\n"

    def test_neutral_line(self):
        L, _ = load_fixture("l1")
        assert serialize_lattice(L, L.index_of("e")).endswith("neutral: e\n")

    def test_singleton(self):
        L = parse_lattice_file("elements: 0\n")
        assert serialize_lattice(L) == "elements: 0\ncovers:\nbottom: 0\ntop: 0\n"
        assert parse_lattice_file(serialize_lattice(L)).n == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip(self, n):
        for L in enumerate_bounded_lattices(n):
            again = parse_lattice_file(serialize_lattice(L))
            assert again.labels == L.labels
            assert (again.leq_table == L.leq_table).all()
