"""
Exhaustive generation of unlabeled finite lattices.

Every lattice with n >= 3 elements arises from a lattice K with n - 1
elements by inserting a new coatom c below the top: removing any coatom
from a lattice leaves a lattice. The new coatom is placed over a nonempty
down-set D of K without its top, and the result is a lattice exactly when
D is closed under those joins of K that stay below the top. Duplicates are
rejected by canonical key at a single merge point, and each class is
emitted with its canonical labeling (bottom 0, top n - 1).
"""

import multiprocessing
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from latmod.core.canonical import canonical_labeling
from latmod.core.lattice import Lattice, build_from_covers, relabel
from latmod.errors import CapExceeded
from latmod.settings import load_settings

Covers = Tuple[Tuple[int, int], ...]
Candidate = Tuple[bytes, Covers]


# ---------------- one extension step ----------------
def _downsets_below_top(K: Lattice) -> Iterator[int]:
    """Nonempty down-sets of K minus its top, as bitmasks over element ids."""
    order = sorted((e for e in K.elements if e != K.top), key=lambda e: (int(K.height[e]), e))
    lower_mask = [sum(1 << a for a in K.lower_covers(e)) for e in K.elements]

    def walk(i: int, mask: int) -> Iterator[int]:
        if i == len(order):
            if mask:
                yield mask
            return
        e = order[i]
        yield from walk(i + 1, mask)
        if lower_mask[e] & ~mask == 0:
            yield from walk(i + 1, mask | (1 << e))

    yield from walk(0, 0)


def _join_closed(K: Lattice, ids: np.ndarray, inside: np.ndarray) -> bool:
    joins = K.join_table[np.ix_(ids, ids)]
    return bool((inside[joins] | (joins == K.top)).all())


def coatom_extensions(K: Lattice) -> Iterator[Covers]:
    """Cover lists (on ids 0..n) of every lattice obtained by adding a coatom n to K."""
    n = K.size
    for mask in _downsets_below_top(K):
        inside = np.array([(mask >> e) & 1 for e in K.elements], dtype=bool)
        ids = np.flatnonzero(inside)
        if not _join_closed(K, ids, inside):
            continue
        maximal = [a for a in ids.tolist() if not any(inside[b] for b in K.upper_covers(a))]
        dropped = {(a, K.top) for a in maximal}
        covers = [edge for edge in K.covers if edge not in dropped]
        covers += [(a, n) for a in maximal] + [(n, K.top)]
        yield tuple(sorted(covers))


def _canonical_children(parent: Tuple[int, Covers]) -> List[Candidate]:
    # Runs in worker processes, so it takes and returns plain tuples.
    size, covers = parent
    K = build_from_covers(size, covers)
    seen: Dict[bytes, Covers] = {}
    for child_covers in coatom_extensions(K):
        child = build_from_covers(size + 1, child_covers)
        key, perm = canonical_labeling(child)
        if key not in seen:
            seen[key] = tuple(sorted((perm[a], perm[b]) for a, b in child_covers))
    return list(seen.items())


# ---------------- level-wise driver ----------------
def _base_level(n: int) -> List[Lattice]:
    if n == 1:
        return [build_from_covers(1, [], name="L1.0")]
    return [build_from_covers(2, [(0, 1)], name="L2.0")]


def _next_level(parents: Sequence[Lattice], workers: int) -> List[Lattice]:
    n = parents[0].size + 1
    jobs = [(K.size, K.covers) for K in parents]
    if workers > 1 and len(jobs) > 1:
        pool = multiprocessing.Pool(processes=workers)
        try:
            results = pool.map(_canonical_children, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        results = [_canonical_children(job) for job in jobs]

    out: Dict[bytes, Lattice] = {}
    for children in results:
        for key, covers in children:
            if key not in out:
                out[key] = build_from_covers(n, covers, name=f"L{n}.{len(out)}")
    return list(out.values())


def lattices_by_size(
    max_size: int,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Dict[int, List[Lattice]]:
    """One canonically labeled representative per isomorphism class, keyed by size."""
    settings = load_settings()
    cap = settings.enumeration_cap if cap is None else cap
    workers = settings.workers if workers is None else workers
    if max_size > cap:
        raise CapExceeded(max_size, cap)

    levels: Dict[int, List[Lattice]] = {}
    for n in range(1, max_size + 1):
        levels[n] = _base_level(n) if n <= 2 else _next_level(levels[n - 1], workers)
    return levels


def enumerate_lattices(
    max_size: int,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    min_size: int = 1,
) -> Iterator[Lattice]:
    """Stream every unlabeled lattice with min_size..max_size elements, smallest first.

    Raises:
        CapExceeded: max_size is above the enumeration cap (default from settings).
    """
    levels = lattices_by_size(max_size, cap=cap, workers=workers)
    return (L for n in range(max(min_size, 1), max_size + 1) for L in levels[n])


def count_lattices(max_size: int, **kwargs) -> List[int]:
    """Number of unlabeled lattices of each size 1..max_size."""
    levels = lattices_by_size(max_size, **kwargs)
    return [len(levels[n]) for n in range(1, max_size + 1)]


def relabel_canonically(L: Lattice) -> Lattice:
    _, perm = canonical_labeling(L)
    return relabel(L, perm)
