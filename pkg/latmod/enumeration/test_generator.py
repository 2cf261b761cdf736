import pytest

from latmod.constructions.families import benzene, boolean, chain, pentagon
from latmod.core.canonical import canonical_form
from latmod.core.lattice import build_from_covers
from latmod.enumeration.generator import (
    coatom_extensions,
    count_lattices,
    enumerate_lattices,
    lattices_by_size,
    relabel_canonically,
)
from latmod.enumeration.oracle import lattices_by_brute_force, naturally_labeled_orders
from latmod.errors import CapExceeded
from latmod.properties.checks import is_graded, is_graded_by_intervals

KNOWN_COUNTS = [1, 1, 1, 2, 5, 15, 53, 222, 1078, 5994]


@pytest.fixture(scope="module")
def levels():
    return lattices_by_size(8, workers=1)


def test_counts_up_to_eight(levels):
    assert [len(levels[n]) for n in range(1, 9)] == KNOWN_COUNTS[:8]


@pytest.mark.timeout(1800)
def test_counts_nine_and_ten():
    assert count_lattices(10, workers=1) == KNOWN_COUNTS


def test_keys_are_unique(levels):
    for n, found in levels.items():
        keys = [canonical_form(L) for L in found]
        assert len(keys) == len(set(keys)), f"duplicate isomorphism class among size {n}"


def test_canonically_labeled(levels):
    for found in levels.values():
        for L in found:
            assert (L.bottom, L.top) == (0, L.size - 1)
            assert relabel_canonically(L).covers == L.covers, "emitted lattices are already canonical"


def test_every_emitted_lattice_revalidates(levels):
    for found in levels.values():
        for L in found:
            assert build_from_covers(L.size, L.covers) == L


def test_complete_against_poset_brute_force(levels):
    oracle = lattices_by_brute_force(7)
    for n in range(1, 8):
        assert {canonical_form(L) for L in levels[n]} == set(oracle[n]), f"size {n} differs from brute force"


def test_deterministic():
    first = [L.covers for L in enumerate_lattices(7, workers=1)]
    second = [L.covers for L in enumerate_lattices(7, workers=1)]
    assert first == second


@pytest.mark.timeout(300)
def test_workers_give_the_same_stream():
    serial = [L.covers for L in enumerate_lattices(7, workers=1)]
    parallel = [L.covers for L in enumerate_lattices(7, workers=2)]
    assert serial == parallel


def test_min_size_and_stream_order():
    sizes = [L.size for L in enumerate_lattices(6, min_size=4)]
    assert sizes == sorted(sizes)
    assert sizes.count(4) == 2 and sizes.count(6) == 15


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_lattices(12)
    with pytest.raises(CapExceeded):
        enumerate_lattices(6, cap=5)


def test_known_lattices_appear(levels):
    keys = {canonical_form(L) for found in levels.values() for L in found}
    for L in (pentagon(), benzene(), boolean(3), chain(7)):
        assert canonical_form(L) in keys, f"{L.name} missing from the corpus"


def test_coatom_extensions_of_square():
    children = list(coatom_extensions(boolean(2)))
    sizes = {len(set(a for edge in covers for a in edge)) for covers in children}
    assert sizes == {5}
    # D = {0}, {0,1}, {0,2}, {0,1,2}; all of them are join-closed below the top
    assert len(children) == 4


@pytest.mark.timeout(900)
def test_graded_check_agrees_with_intervals_on_corpus():
    checked = 0
    for L in enumerate_lattices(9, workers=1):
        assert bool(is_graded(L)) == is_graded_by_intervals(L), f"{L.covers}"
        checked += 1
    assert checked == sum(KNOWN_COUNTS[:9])


def test_naturally_labeled_orders_on_three_points():
    # labeled posets on {0,1,2} whose relations respect the integer order
    assert sum(1 for _ in naturally_labeled_orders(3)) == 7
