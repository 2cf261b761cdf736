"""Maps G(k) -> M determined by a chain c_0 < ... < c_k and a point w of a graded lattice M."""

from typing import Iterator, Sequence, Tuple, Union

import numpy as np

from latmod.constructions.grid import GridQuotient
from latmod.core.chains import Chain, all_chains
from latmod.core.lattice import Lattice, sublattice_generated
from latmod.errors import HypothesisFailed, InvalidChain
from latmod.properties.checks import is_graded
from latmod.properties.report import PropertyReport, failed, passed


def grid_image(model: GridQuotient, M: Lattice, chain: Sequence[int], w: int) -> np.ndarray:
    """Image of every cell: (i, j) -> (w ∨ c_i) ∧ c_j, reading c_{-1} ∨ w as w and c_{k+1} as top."""
    k = model.k
    image = np.empty(model.lattice.size, dtype=np.intp)
    for n, (i, j) in enumerate(model.index_set):
        low = w if i == -1 else M.join(w, chain[i])
        image[n] = low if j == k + 1 else M.meet(low, chain[j])
    return image


def universal_property_check(
    k: int, M: Lattice, chain: Union[Chain, Sequence[int]], w: int
) -> PropertyReport:
    """Verify that G(k) maps homomorphically onto M sending x_i -> c_i and y -> w.

    Raises:
        HypothesisFailed: M is not graded, the chain does not have k + 1
            elements, or the chain and w do not generate M.
    """
    try:
        c = chain if isinstance(chain, Chain) else Chain(M, tuple(chain))
    except InvalidChain as e:
        raise HypothesisFailed(f"not a chain: {e}") from e
    M.check(w)
    if len(c) != k + 1:
        raise HypothesisFailed(f"chain {c.elements} has {len(c)} elements, expected {k + 1}")
    if not is_graded(M):
        raise HypothesisFailed(f"{M.name or 'M'} is not graded")
    if sublattice_generated(M, set(c) | {w}) != frozenset(M.elements):
        raise HypothesisFailed(f"chain {c.elements} and {w} do not generate M")

    model = GridQuotient(k)
    G = model.lattice
    f = grid_image(model, M, c.elements, w)
    name = f"universal({k})"
    for op, table_G, table_M in (("meet", G.meet_table, M.meet_table), ("join", G.join_table, M.join_table)):
        bad = np.argwhere(f[table_G] != table_M[f[:, None], f[None, :]])
        if bad.size:
            a, b = (int(v) for v in bad[0])
            return failed(name, (model.cell(a), model.cell(b)), detail=f"map does not preserve the {op} of {G.label(a)} and {G.label(b)}")
    missing = set(M.elements) - set(int(e) for e in f)
    if missing:
        return failed(name, sorted(missing), detail="map is not surjective")
    return passed(name, witness=f.tolist(), detail=f"G({k}) with {G.size} elements maps onto {M.size}")


def generating_pairs(M: Lattice) -> Iterator[Tuple[Chain, int]]:
    """Every (chain, w) whose union generates M."""
    everything = frozenset(M.elements)
    for c in all_chains(M):
        for w in M.elements:
            if sublattice_generated(M, set(c) | {w}) == everything:
                yield c, w
