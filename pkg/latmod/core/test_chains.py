import pytest

from latmod.core.chains import (
    Chain,
    MaximalChain,
    all_chains,
    maximal_chains,
    maximal_chains_between,
)
from latmod.core.lattice import build_from_covers
from latmod.errors import InvalidChain, NotComparable

N5_COVERS = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]
B2_COVERS = [(0, 1), (0, 2), (1, 3), (2, 3)]


def boolean_covers(n):
    return [(s, s | (1 << i)) for s in range(1 << n) for i in range(n) if not s & (1 << i)]


def test_diamond_has_two_chains():
    L = build_from_covers(4, B2_COVERS)
    chains = maximal_chains(L)
    assert [c.elements for c in chains] == [(0, 1, 3), (0, 2, 3)]
    assert all(c.length == 2 for c in chains)


def test_pentagon_chain_lengths():
    L = build_from_covers(5, N5_COVERS)
    assert sorted(c.length for c in maximal_chains(L)) == [2, 3]


def test_boolean_three_has_six_chains():
    L = build_from_covers(8, boolean_covers(3))
    chains = maximal_chains(L)
    assert len(chains) == 6
    assert [c.elements for c in chains] == sorted(c.elements for c in chains), "lexicographic order"
    for c in chains:
        assert c.elements[0] == L.bottom and c.elements[-1] == L.top
        assert all(L.is_cover(a, b) for a, b in zip(c.elements, c.elements[1:]))


def test_chains_between():
    L = build_from_covers(8, boolean_covers(3))
    between = maximal_chains_between(L, 1, 7)
    assert [c.elements for c in between] == [(1, 3, 7), (1, 5, 7)]
    assert maximal_chains_between(L, 3, 3)[0].elements == (3,)
    with pytest.raises(NotComparable):
        maximal_chains_between(L, 1, 2)


def test_chain_validation():
    L = build_from_covers(5, N5_COVERS)
    with pytest.raises(InvalidChain):
        Chain(L, (1, 3))
    with pytest.raises(InvalidChain):
        MaximalChain(L, (0, 2, 4))
    assert Chain(L, (0, 2, 4)).is_maximal() is False
    assert MaximalChain(L, (0, 3, 4)).length == 2


def test_all_chains_counts():
    L = build_from_covers(4, B2_COVERS)
    chains = list(all_chains(L))
    # 4 singletons, 5 comparable pairs, 2 three-element chains
    assert len(chains) == 11
    assert len(list(all_chains(L, min_length=1))) == 7
