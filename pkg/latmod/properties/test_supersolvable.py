import pytest

from latmod.constructions.families import (
    benzene,
    boolean,
    chain,
    diamond,
    divisor_lattice,
    partition_lattice,
    pentagon,
    product,
)
from latmod.constructions.grid import grid_quotient
from latmod.core.chains import maximal_chains
from latmod.core.lattice import sublattice_generated
from latmod.properties.checks import is_distributive_on, is_graded, left_modular_elements
from latmod.properties.supersolvable import candidate_order, is_m_chain, is_supersolvable


def test_partition_lattice_four_supersolvable():
    L = partition_lattice(4)
    report = is_supersolvable(L)
    assert report.verdict
    assert report.witness.is_maximal()


def test_benzene_not_supersolvable():
    report = is_supersolvable(benzene())
    assert not report.verdict
    m, c = report.counterexample
    L = benzene()
    assert not is_distributive_on(L, sublattice_generated(L, set(m) | set(c)))


def test_pentagon_not_supersolvable():
    L = pentagon()
    assert not is_supersolvable(L)
    # the left modular chain together with the chain through c generates everything
    assert sublattice_generated(L, {0, 1, 2, 3, 4}) == frozenset(L.elements)
    assert is_m_chain(L, maximal_chains(L)[0]) is not None


@pytest.mark.parametrize("L", [
    chain(3), boolean(3), divisor_lattice(30), diamond(), partition_lattice(3),
    product(chain(2), chain(2)), grid_quotient(2)[0],
], ids=lambda L: L.name)
def test_supersolvable_families(L):
    assert is_supersolvable(L)


@pytest.mark.parametrize("L", [
    partition_lattice(4), diamond(), boolean(3), benzene(), pentagon(),
], ids=lambda L: L.name)
def test_supersolvable_implies_graded_with_left_modular_witness(L):
    report = is_supersolvable(L)
    if not report.verdict:
        return
    assert is_graded(L)
    flags = left_modular_elements(L)
    assert all(flags[e] for e in report.witness), "an M-chain consists of left modular elements"


def test_candidate_order_puts_left_modular_chains_first():
    L = pentagon()
    ordered = candidate_order(L, maximal_chains(L))
    assert ordered[0].elements == (0, 1, 2, 4)
