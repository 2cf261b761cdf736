import pytest

from latmod.constructions.families import (
    FAMILIES,
    benzene,
    boolean,
    chain,
    diamond,
    divisor_lattice,
    figure1,
    free_chain_point,
    free_chain_point_generators,
    lattice_from_spec,
    named_lattice,
    partition_lattice,
    pentagon,
    point,
    product,
)
from latmod.core.canonical import is_isomorphic
from latmod.errors import ParamOutOfRange, UnknownFamily
from latmod.properties.checks import is_distributive, is_graded


def test_figure1_shape():
    L = figure1()
    assert L.size == 7
    left = [L.labels.index(n) for n in ("0̂", "l1", "l2", "l3", "1̂")]
    right = [L.labels.index(n) for n in ("0̂", "r1", "r2", "1̂")]
    for path in (left, right):
        assert all(L.is_cover(a, b) for a, b in zip(path, path[1:])), f"{path} should be a saturated chain"
    assert not is_graded(L)


def test_partition_lattice_three_is_diamond():
    P3 = partition_lattice(3)
    assert P3.size == 5
    assert is_isomorphic(P3, diamond())
    assert P3.label(P3.bottom) == "1|2|3"
    assert P3.label(P3.top) == "123"


@pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_partition_lattice_sizes(n, bell):
    L = partition_lattice(n)
    assert L.size == bell
    assert L.rank == n - 1
    assert is_graded(L)


def test_product_of_two_chains_is_square():
    assert is_isomorphic(product(chain(1), chain(1)), boolean(2))


def test_divisor_lattice_twelve():
    L = divisor_lattice(12)
    assert L.size == 6
    assert is_isomorphic(L, product(chain(2), chain(1)))
    assert L.label(L.bottom) == "1" and L.label(L.top) == "12"


def test_small_named_lattices():
    assert point().size == 1
    assert chain(0).size == 1
    assert chain(4).size == 5 and chain(4).rank == 4
    assert boolean(3).size == 8
    assert is_distributive(boolean(4))
    assert not is_distributive(diamond())
    assert not is_distributive(pentagon())
    assert is_graded(benzene())


def test_free_chain_point():
    assert is_isomorphic(free_chain_point(0), boolean(2))
    F = free_chain_point(1)
    assert F.size == 9
    gens = free_chain_point_generators(1)
    assert F.lt(gens["x0"], gens["x1"])
    assert not F.le(gens["y"], gens["x1"]) and not F.le(gens["x1"], gens["y"])
    assert not is_graded(F)
    with pytest.raises(ParamOutOfRange):
        free_chain_point(2)


def test_named_lattice_dispatch():
    assert is_isomorphic(named_lattice("chain", {"k": 3}), chain(3))
    assert is_isomorphic(named_lattice("N5"), pentagon())
    L = named_lattice("product", {"left": chain(1), "right": chain(2)})
    assert L.size == 6


@pytest.mark.parametrize("family, params", [
    ("chain", {}),
    ("chain", {"k": -1}),
    ("chain", {"k": 2, "n": 3}),
    ("partition_lattice", {"n": 7}),
    ("boolean", {"n": "two"}),
])
def test_bad_params(family, params):
    with pytest.raises(ParamOutOfRange):
        named_lattice(family, params)


def test_unknown_family():
    with pytest.raises(UnknownFamily) as excinfo:
        named_lattice("hypercube")
    assert "chain" in str(excinfo.value)


@pytest.mark.parametrize("spec, size", [
    ("pentagon", 5),
    ("chain(3)", 4),
    ("chain(k=3)", 4),
    ("product(chain(1), chain(1))", 4),
    ("product(boolean(2),divisor_lattice(6))", 16),
    ("grid(1)", 8),
    ("downsets(2, 2)", 6),
])
def test_lattice_from_spec(spec, size):
    assert lattice_from_spec(spec).size == size


@pytest.mark.parametrize("spec", ["chain(3", "chain(3))", "(3)", "chain(1,2)"])
def test_malformed_spec(spec):
    with pytest.raises(ParamOutOfRange):
        lattice_from_spec(spec)


def test_every_family_is_documented():
    for name, family in FAMILIES.items():
        assert family.doc, f"{name} has no description"
