import pytest

from latmod.constructions.families import (
    benzene,
    boolean,
    chain,
    diamond,
    divisor_lattice,
    figure1,
    partition_lattice,
    pentagon,
    product,
)
from latmod.core.lattice import sublattice_generated
from latmod.enumeration.generator import enumerate_lattices
from latmod.harness.lemmas import rank_function_inherited, verify_lemma_suite


def _by_name(suite):
    return {r.name: r for r in suite.reports}


@pytest.mark.parametrize(
    "L",
    [diamond(), partition_lattice(4), boolean(4), divisor_lattice(60), product(chain(2), chain(3))],
    ids=lambda L: L.name,
)
def test_named_lattices_pass(L):
    suite = verify_lemma_suite(L)
    assert suite, [r.to_dict() for r in suite.failures()]
    assert all(r.applicable for r in suite.reports), f"{L.name} meets every hypothesis"


def test_pentagon_is_not_graded():
    reports = _by_name(verify_lemma_suite(pentagon()))
    assert reports["chain-modular"].verdict and not reports["chain-modular"].applicable
    assert reports["interval-chain"].applicable


def test_benzene_has_no_left_modular_chain():
    reports = _by_name(verify_lemma_suite(benzene()))
    assert not reports["interval-chain"].applicable
    assert not reports["chain-modular"].applicable
    assert all(r.verdict for r in reports.values())


def test_figure1():
    suite = verify_lemma_suite(figure1())
    assert suite
    assert [r.name for r in suite.reports] == [
        "quotient-cover", "cover-shift", "interval-lm", "interval-chain", "chain-modular",
    ]


def test_rank_inherited():
    L = boolean(3)
    assert rank_function_inherited(L, sublattice_generated(L, {0, 1, 3, 7, 4}))
    # {0, 7} alone: 0 ⋖ 7 in the sub-poset but not in L
    assert not rank_function_inherited(L, {0, 7})


@pytest.mark.timeout(900)
def test_corpus_up_to_eight():
    for L in enumerate_lattices(8):
        suite = verify_lemma_suite(L)
        assert suite, f"{L.covers}: {[r.to_dict() for r in suite.failures()]}"
