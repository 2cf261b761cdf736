"""
Canonical labeling of lattices.

The key of a lattice is the lexicographically least encoding of its cover
relation over all labelings reachable by individualization/refinement search
on the Hasse diagram. Colors start from (height, depth, #below, #above,
#lower covers, #upper covers) and are refined until stable; interchangeable
twins (same upper and lower covers) are tried once per cell, and children
in the orbit of an explored sibling are pruned.
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from networkx.utils import UnionFind

from latmod.core.lattice import Lattice

Colors = List[int]


def _rank(signatures: Sequence) -> Colors:
    ranking = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [ranking[s] for s in signatures]


def _depths(L: Lattice) -> List[int]:
    depth = [0] * L.size
    for a in sorted(L.elements, key=lambda e: -int(L.height[e])):
        for b in L.upper_covers(a):
            depth[a] = max(depth[a], depth[b] + 1)
    return depth


def _initial_colors(L: Lattice) -> Colors:
    below = L.leq.sum(axis=0)
    above = L.leq.sum(axis=1)
    depth = _depths(L)
    return _rank([
        (int(L.height[a]), depth[a], int(below[a]), int(above[a]),
         len(L.lower_covers(a)), len(L.upper_covers(a)))
        for a in L.elements
    ])


def _refine(L: Lattice, colors: Colors) -> Colors:
    count = len(set(colors))
    while True:
        signatures = [
            (colors[v],
             tuple(sorted(colors[u] for u in L.upper_covers(v))),
             tuple(sorted(colors[u] for u in L.lower_covers(v))))
            for v in L.elements
        ]
        refined = _rank(signatures)
        new_count = len(set(refined))
        if new_count == count:
            return refined
        colors, count = refined, new_count


def _individualize(colors: Colors, chosen: int, cell: int) -> Colors:
    return _rank([
        2 * c + (1 if c == cell and v != chosen else 0)
        for v, c in enumerate(colors)
    ])


def _certificate(L: Lattice, colors: Colors) -> List[Tuple[int, int]]:
    return sorted((colors[a], colors[b]) for a, b in L.covers)


@dataclass
class _Leaf:
    path: Tuple[int, ...]
    colors: Colors
    cert: List[Tuple[int, int]]


def _automorphism(src: Colors, dst: Colors) -> Tuple[int, ...]:
    """Map a to the element of dst's labeling that carries src's label of a."""
    position = [0] * len(dst)
    for v, c in enumerate(dst):
        position[c] = v
    return tuple(position[c] for c in src)


def _common_prefix(p: Sequence[int], q: Sequence[int]) -> int:
    k = 0
    while k < len(p) and k < len(q) and p[k] == q[k]:
        k += 1
    return k


def canonical_labeling(L: Lattice) -> Tuple[bytes, Tuple[int, ...]]:
    """Return (key, perm) where perm[a] is the canonical id of element a.

    Automorphisms are read off pairs of leaves with equal certificates. A
    child whose vertex lies in the orbit of an explored sibling (under the
    automorphisms fixing the current path) is skipped, and a leaf equivalent
    to the first or best leaf unwinds the search to the level where the two
    paths part.
    """
    first: List[Optional[_Leaf]] = [None]
    best: List[Optional[_Leaf]] = [None]
    generators: List[Tuple[int, ...]] = []

    def twins(u: int, v: int) -> bool:
        return L.upper_covers(u) == L.upper_covers(v) and L.lower_covers(u) == L.lower_covers(v)

    def leaf(colors: Colors, path: Tuple[int, ...]) -> Optional[int]:
        cert = _certificate(L, colors)
        here = _Leaf(path, colors, cert)
        if first[0] is None:
            first[0] = best[0] = here
            return None
        for known in (first[0], best[0]):
            if cert == known.cert:
                generators.append(_automorphism(known.colors, colors))
                return _common_prefix(known.path, path)
        if cert < best[0].cert:
            best[0] = here
        return None

    def search(colors: Colors, path: Tuple[int, ...]) -> Optional[int]:
        sizes = Counter(colors)
        cell = min((c for c, m in sizes.items() if m > 1), default=None)
        if cell is None:
            return leaf(colors, path)
        tried: List[int] = []
        orbits, used = None, -1
        for v in (v for v in L.elements if colors[v] == cell):
            if any(twins(u, v) for u in tried):
                continue
            if tried and generators:
                if used != len(generators):
                    orbits, used = UnionFind(L.elements), len(generators)
                    for g in generators:
                        if all(g[p] == p for p in path):
                            for a, b in enumerate(g):
                                orbits.union(a, b)
                if any(orbits[u] == orbits[v] for u in tried):
                    continue
            tried.append(v)
            jump = search(_refine(L, _individualize(colors, v, cell)), path + (v,))
            if jump is not None and jump < len(path):
                return jump
        return None

    search(_refine(L, _initial_colors(L)), ())
    cert, colors = best[0].cert, best[0].colors
    flat = [L.size] + [e for edge in cert for e in edge]
    key = np.asarray(flat, dtype=">u4").tobytes()
    return key, tuple(colors)


def canonical_form(L: Lattice) -> bytes:
    """Isomorphism-invariant key: equal keys iff the lattices are isomorphic."""
    return canonical_labeling(L)[0]


def is_isomorphic(L: Lattice, M: Lattice) -> bool:
    return L.size == M.size and len(L.covers) == len(M.covers) and canonical_form(L) == canonical_form(M)
