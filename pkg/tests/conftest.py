"""
Shared lattices for the test suite.
"""

from typing import List

import pytest

from unilattice.cli.lattice_file import load_fixture
from unilattice.core import BoundedLattice, build_poset, validate_bounded_lattice


def make_lattice(elements: str, covers: str) -> BoundedLattice:
    """``make_lattice("0 a 1", "0<a a<1")``"""
    pairs = [tuple(token.split("<")) for token in covers.split()]
    return validate_bounded_lattice(build_poset(elements.split(), pairs))


def chain(n: int) -> BoundedLattice:
    labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return make_lattice(" ".join(labels), " ".join(f"{a}<{b}" for a, b in zip(labels, labels[1:])))


def ix(L: BoundedLattice, *labels: str) -> List[int]:
    return [L.index_of(label) for label in labels]


@pytest.fixture
def l1() -> BoundedLattice:
    return load_fixture("l1")[0]


@pytest.fixture
def ex3() -> BoundedLattice:
    return load_fixture("ex3")[0]


@pytest.fixture
def ex3_without_c() -> BoundedLattice:
    return make_lattice("0 a b e 1", "0<a a<b a<e b<1 e<1")


@pytest.fixture
def diamond() -> BoundedLattice:
    return make_lattice("0 x y 1", "0<x 0<y x<1 y<1")


@pytest.fixture
def chain3() -> BoundedLattice:
    return chain(3)


@pytest.fixture
def chain4() -> BoundedLattice:
    return chain(4)


@pytest.fixture
def join_escape() -> BoundedLattice:
    """I_e = {y, z} with y v z = w strictly between e and 1."""
    return make_lattice("0 e y z w 1", "0<e 0<y 0<z e<w y<w z<w w<1")
