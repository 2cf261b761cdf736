import pytest

from latmod.constructions.families import boolean, diamond, partition_lattice, pentagon
from latmod.core.chains import Chain, all_chains, maximal_chains
from latmod.enumeration.generator import enumerate_lattices
from latmod.errors import InvalidChain
from latmod.harness.pq import (
    PQViolation,
    decreasing_sequences,
    increasing_sequences,
    p_sides,
    pq_violations,
    q_sides,
    repetition_consistency,
    verify_pq,
    verify_pq_all_chains,
)
from latmod.properties.checks import find_left_modular_chain, is_graded


def test_t_one_is_tautological():
    for L in (pentagon(), diamond(), boolean(2)):
        for x in maximal_chains(L):
            for y in maximal_chains(L):
                assert verify_pq(L, x, y, 1), f"{L.name}: {x.elements} {y.elements}"


def test_pentagon_q2_witness():
    # 0̂=0, a=1, b=2, c=3, 1̂=4
    L = pentagon()
    violations = list(pq_violations(L, (0, 1, 2, 4), (0, 3, 4), 2))
    assert PQViolation("Q2", (2, 1), (3, 4), 1, 2) in violations
    assert q_sides(L, (2, 1), (3, 4)) == (1, 2)
    assert not verify_pq(L, (0, 1, 2, 4), (0, 3, 4), 2)


@pytest.mark.parametrize("L", [pentagon(), diamond(), boolean(3)], ids=lambda L: L.name)
@pytest.mark.parametrize("t", [1, 2, 3])
def test_sweep_matches_side_by_side_evaluation(L, t):
    x = maximal_chains(L)[0]
    for y in maximal_chains(L):
        expected = []
        for a in decreasing_sequences(x, t):
            for b in increasing_sequences(y, t):
                for identity, sides in (("P", p_sides), ("Q", q_sides)):
                    lhs, rhs = sides(L, a, b)
                    if lhs != rhs:
                        expected.append(PQViolation(f"{identity}{t}", a, b, lhs, rhs))
        assert list(pq_violations(L, x, y, t)) == expected


def test_partition_lattice_all_chains():
    L = partition_lattice(4)
    x = find_left_modular_chain(L)
    assert verify_pq_all_chains(L, x, 3)


def test_arbitrary_ychains():
    L = partition_lattice(4)
    x = find_left_modular_chain(L)
    for y in all_chains(L):
        for t in (1, 2):
            assert verify_pq(L, x, y, t), f"{y.elements}, t={t}"


def test_xchain_must_be_maximal():
    with pytest.raises(InvalidChain):
        verify_pq(boolean(2), (0, 3), (0, 2, 3), 2)
    with pytest.raises(ValueError):
        list(pq_violations(boolean(2), (0, 1, 3), (0, 2, 3), 0))


def test_repetition_reduces_t():
    for L in (pentagon(), diamond(), partition_lattice(4)):
        for x in maximal_chains(L):
            y = maximal_chains(L)[-1]
            for t in (2, 3):
                assert repetition_consistency(L, x, y, t), f"{L.name}: t={t}"


def test_sides_on_a_repeated_pair():
    L = pentagon()
    assert p_sides(L, (2, 2), (3, 3)) == p_sides(L, (2,), (3,))
    assert q_sides(L, (2, 2), (3, 3)) == q_sides(L, (2,), (3,))


@pytest.mark.timeout(600)
def test_graded_left_modular_corpus():
    for L in enumerate_lattices(8):
        x = find_left_modular_chain(L)
        if x is None or not is_graded(L):
            continue
        report = verify_pq_all_chains(L, x, 3)
        assert report, f"{L.covers}: {report.detail}"


def test_chain_argument_accepts_chain_objects():
    L = boolean(2)
    assert verify_pq(L, Chain(L, (0, 1, 3)), Chain(L, (2,)), 2)
