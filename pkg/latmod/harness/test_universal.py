import pytest

from latmod.constructions.families import boolean, chain, pentagon
from latmod.constructions.grid import GridQuotient
from latmod.enumeration.generator import enumerate_lattices
from latmod.errors import HypothesisFailed
from latmod.harness.universal import generating_pairs, universal_property_check
from latmod.properties.checks import is_graded


@pytest.mark.parametrize("k", range(4))
def test_grid_maps_to_itself(k):
    model = GridQuotient(k)
    gens = model.generators
    report = universal_property_check(k, model.lattice, model.chain_generators(), gens["y"])
    assert report
    assert report.witness == list(range(model.lattice.size)), "canonical generators give the identity"


def test_square():
    report = universal_property_check(2, boolean(2), (0, 1, 3), 2)
    assert report
    assert sorted(set(report.witness)) == [0, 1, 2, 3]
    assert len(report.witness) == 13


def test_hypotheses():
    with pytest.raises(HypothesisFailed):
        universal_property_check(3, pentagon(), (0, 1, 2, 4), 3)
    with pytest.raises(HypothesisFailed):
        universal_property_check(1, boolean(2), (0, 1, 3), 2)
    with pytest.raises(HypothesisFailed):
        universal_property_check(1, boolean(2), (0, 1), 1)
    with pytest.raises(HypothesisFailed):
        universal_property_check(1, boolean(2), (1, 2), 0)


def test_chain_target():
    L = chain(3)
    assert universal_property_check(2, L, (1, 2, 3), 0)


def _check_corpus(max_size):
    checked = 0
    for M in enumerate_lattices(max_size):
        if not is_graded(M):
            continue
        for c, w in generating_pairs(M):
            report = universal_property_check(len(c) - 1, M, c, w)
            assert report, f"{M.covers}, chain {c.elements}, w={w}: {report.detail}"
            checked += 1
    return checked


def test_corpus_up_to_six():
    assert _check_corpus(6) > 0


@pytest.mark.timeout(1200)
def test_corpus_up_to_eight():
    assert _check_corpus(8) > 0
