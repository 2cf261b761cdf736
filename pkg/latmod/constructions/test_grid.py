import pytest

from latmod.congruence.quotient import maximum_graded_quotient
from latmod.constructions.families import boolean, free_chain_point
from latmod.constructions.grid import GridQuotient, grid_quotient
from latmod.core.canonical import is_isomorphic
from latmod.core.lattice import sublattice_generated
from latmod.errors import ParamOutOfRange
from latmod.properties.checks import is_distributive, is_graded


@pytest.mark.parametrize("k, size", [(0, 4), (1, 8), (2, 13), (3, 19)])
def test_sizes(k, size):
    L, gens = grid_quotient(k)
    assert L.size == size
    assert L.rank == 2 * k + 2
    assert sorted(gens) == sorted([f"x{i}" for i in range(k + 1)] + ["y"])


def test_k0_is_square():
    assert is_isomorphic(grid_quotient(0)[0], boolean(2))


@pytest.mark.parametrize("k", range(0, 9))
def test_graded_distributive_and_generated(k):
    model = GridQuotient(k)
    L = model.lattice
    assert L.size == model.expected_size
    assert is_graded(L), f"G({k}) should be graded"
    assert is_distributive(L), f"G({k}) should be distributive"
    assert sublattice_generated(L, model.generators.values()) == frozenset(L.elements)
    for e in L.elements:
        assert L.height[e] == model.rank_of(model.cell(e)), f"rank of {model.cell(e)} is i + j + 1"


@pytest.mark.parametrize("k", range(0, 6))
def test_elements_below_y(k):
    model = GridQuotient(k)
    L = model.lattice
    y = model.generators["y"]
    below = {int(e) for e in L.down_set(y)}
    expected = {y} | {L.meet(y, x) for x in model.chain_generators()}
    assert below == expected
    assert len(below) == k + 2


@pytest.mark.parametrize("k", range(0, 6))
def test_elements_above_x0_are_generated(k):
    model = GridQuotient(k)
    L, g = model.lattice, model.generators
    gens = [g[f"x{i}"] for i in range(1, k + 1)] + [L.join(g["y"], g["x0"])]
    expected = {model.element(i, j) for i, j in model.index_set if i >= 0} - {model.element(0, 0)}
    assert sublattice_generated(L, gens) == frozenset(expected)


@pytest.mark.parametrize("k", range(1, 6))
def test_meet_and_join_forms_agree(k):
    model = GridQuotient(k)
    L, g = model.lattice, model.generators
    y, x0 = g["y"], g["x0"]
    for n in range(k + 1):
        xn = g[f"x{n}"]
        left = L.join(L.meet(y, xn), x0)
        right = L.meet(L.join(y, x0), xn)
        assert left == right == model.element(0, n)


def test_cell_lookup():
    model = GridQuotient(2)
    assert model.cell(model.element(-1, 3)) == (-1, 3)
    assert model.lattice.bottom == model.element(-1, 0)
    assert model.lattice.top == model.element(2, 3)
    with pytest.raises(ParamOutOfRange):
        model.element(2, 1)


def test_negative_k():
    with pytest.raises(ParamOutOfRange):
        grid_quotient(-1)


@pytest.mark.parametrize("k", [0, 1])
def test_free_lattice_quotient_matches_grid(k):
    result = maximum_graded_quotient(free_chain_point(k))
    assert result is not None, "the free lattice should have a maximum graded quotient"
    Q, projection = result
    assert is_isomorphic(Q, grid_quotient(k)[0])
    assert len(set(projection)) == Q.size
