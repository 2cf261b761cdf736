"""
Slow completeness oracle for the lattice generator.

Every lattice is a bounded poset, and every poset has a natural labeling,
so taking all transitive relations i < j (i < j as integers) on the inner
points, adding a bottom and a top, and keeping those that are lattices
reaches every isomorphism class.
"""

from itertools import combinations, product
from typing import Dict, Iterator

import numpy as np

from latmod.core.canonical import canonical_labeling
from latmod.core.lattice import Lattice, build_from_covers, covers_of_order, relabel
from latmod.errors import CapExceeded, NotALattice

MAX_ORACLE_SIZE = 8


def naturally_labeled_orders(m: int) -> Iterator[np.ndarray]:
    """Reflexive order matrices on m points whose relations all go upward in id."""
    pairs = list(combinations(range(m), 2))
    for bits in product((False, True), repeat=len(pairs)):
        leq = np.eye(m, dtype=bool)
        for (i, j), on in zip(pairs, bits):
            leq[i, j] = on
        s = leq.astype(np.int64)
        if ((s @ s > 0) & ~leq).any():
            continue
        yield leq


def bounded_posets(n: int) -> Iterator[np.ndarray]:
    """Order matrices with a bottom (id 0) and a top (id n - 1) on n >= 2 points."""
    m = n - 2
    for inner in naturally_labeled_orders(m):
        leq = np.zeros((n, n), dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        leq[1:n - 1, 1:n - 1] = inner
        yield leq


def lattices_by_brute_force(max_size: int) -> Dict[int, Dict[bytes, Lattice]]:
    """Canonical key -> canonically labeled lattice, per size 1..max_size."""
    if max_size > MAX_ORACLE_SIZE:
        raise CapExceeded(max_size, MAX_ORACLE_SIZE)
    found: Dict[int, Dict[bytes, Lattice]] = {1: {}}
    point = build_from_covers(1, [])
    found[1][canonical_labeling(point)[0]] = point
    for n in range(2, max_size + 1):
        found[n] = {}
        for leq in bounded_posets(n):
            try:
                L = build_from_covers(n, covers_of_order(leq))
            except NotALattice:
                continue
            key, perm = canonical_labeling(L)
            if key not in found[n]:
                found[n][key] = relabel(L, perm)
    return found
