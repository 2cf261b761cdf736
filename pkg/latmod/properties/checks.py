"""
Structural properties of finite lattices.

Every check reads the dense meet/join tables of :class:`Lattice`; universal
properties report the first violation they find (in row-major id order) so
that a counterexample can be re-evaluated by hand.
"""

from typing import Iterable, List, Optional, Set, Tuple

import numpy as np

from latmod.core.chains import Chain, MaximalChain
from latmod.core.lattice import Lattice
from latmod.errors import NotComparable, NotLeftModularChain
from latmod.properties.report import PropertyReport, failed, passed

Triple = Tuple[int, int, int]


# ---------------- gradedness ----------------
def is_graded(L: Lattice) -> PropertyReport:
    """True iff every cover a ⋖ b raises the height by exactly one."""
    h = L.height
    for a, b in L.covers:
        if h[b] != h[a] + 1:
            return failed(
                "graded", (a, b),
                detail=f"cover {a} ⋖ {b} goes from height {int(h[a])} to {int(h[b])}",
            )
    return passed("graded", witness=(L.rank,), detail=f"rank {L.rank}")


def is_graded_by_intervals(L: Lattice) -> bool:
    """Direct check: for every y <= z all saturated chains y..z have one length."""
    order = sorted(L.elements, key=lambda e: int(L.height[e]))
    for y in L.elements:
        lengths: List[Set[int]] = [set() for _ in L.elements]
        lengths[y].add(0)
        for b in order:
            if not L.leq[y, b] or b == y:
                continue
            for a in L.lower_covers(b):
                if L.leq[y, a]:
                    lengths[b].update(n + 1 for n in lengths[a])
            if len(lengths[b]) > 1:
                return False
    return True


# ---------------- distributivity ----------------
def _distributive_violation(L: Lattice, ids: np.ndarray) -> Optional[Triple]:
    M, J = L.meet_table, L.join_table
    joins = J[np.ix_(ids, ids)]
    for a in ids:
        lhs = M[a, joins]
        ma = M[a, ids]
        rhs = J[ma[:, None], ma[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j = bad[0]
            return int(a), int(ids[i]), int(ids[j])
    return None


def is_distributive(L: Lattice) -> PropertyReport:
    """a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all triples."""
    bad = _distributive_violation(L, np.arange(L.size))
    if bad is not None:
        a, b, c = bad
        return failed(
            "distributive", bad,
            detail=f"{a} ∧ ({b} ∨ {c}) = {L.meet(a, L.join(b, c))} but "
                   f"({a} ∧ {b}) ∨ ({a} ∧ {c}) = {L.join(L.meet(a, b), L.meet(a, c))}",
        )
    return passed("distributive")


def is_distributive_on(L: Lattice, elements: Iterable[int]) -> bool:
    """Distributivity of a meet/join-closed subset, using L's operations."""
    ids = np.array(sorted(set(int(e) for e in elements)), dtype=np.intp)
    if ids.size <= 2:
        return True
    return _distributive_violation(L, ids) is None


# ---------------- modularity ----------------
def modular_triple(L: Lattice, x: int, y: int, z: int) -> bool:
    """M(x, y, z): (y ∨ x) ∧ z = y ∨ (x ∧ z), defined for y <= z."""
    L.check(x, y, z)
    if not L.leq[y, z]:
        raise NotComparable(y, z)
    return L.meet(L.join(y, x), z) == L.join(y, L.meet(x, z))


def _comparable_pairs(L: Lattice) -> Tuple[np.ndarray, np.ndarray]:
    return np.nonzero(L.leq)


def _left_modular_violation(L: Lattice, x: int, ys: np.ndarray, zs: np.ndarray) -> Optional[Tuple[int, int]]:
    M, J = L.meet_table, L.join_table
    lhs = M[J[ys, x], zs]
    rhs = J[ys, M[x, zs]]
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        return int(ys[bad[0]]), int(zs[bad[0]])
    return None


def is_left_modular_element(L: Lattice, x: int) -> PropertyReport:
    """True iff M(x, y, z) holds for every comparable pair y <= z."""
    L.check(x)
    ys, zs = _comparable_pairs(L)
    bad = _left_modular_violation(L, x, ys, zs)
    name = f"left-modular element {x}"
    if bad is not None:
        y, z = bad
        return failed(
            name, bad,
            detail=f"({y} ∨ {x}) ∧ {z} = {L.meet(L.join(y, x), z)} but "
                   f"{y} ∨ ({x} ∧ {z}) = {L.join(y, L.meet(x, z))}",
        )
    return passed(name, witness=(x,))


def left_modular_elements(L: Lattice) -> Tuple[bool, ...]:
    """Flag per element id: is it left modular?"""
    ys, zs = _comparable_pairs(L)
    return tuple(_left_modular_violation(L, x, ys, zs) is None for x in L.elements)


def is_modular_pair(L: Lattice, x: int, z: int) -> bool:
    """x M z: M(x, y, z) for every y <= z."""
    L.check(x, z)
    ys = L.down_set(z)
    zs = np.full_like(ys, z)
    return _left_modular_violation(L, x, ys, zs) is None


def is_modular_element(L: Lattice, x: int) -> bool:
    """x M z and z M x for every z."""
    return all(is_modular_pair(L, x, z) and is_modular_pair(L, z, x) for z in L.elements)


def is_modular(L: Lattice) -> PropertyReport:
    """Every triple with y <= z satisfies M(x, y, z)."""
    ys, zs = _comparable_pairs(L)
    for x in L.elements:
        bad = _left_modular_violation(L, x, ys, zs)
        if bad is not None:
            return failed("modular", (x,) + bad,
                          detail=f"M({x}, {bad[0]}, {bad[1]}) fails")
    return passed("modular")


# ---------------- left modular chains ----------------
def find_left_modular_chain(L: Lattice) -> Optional[MaximalChain]:
    """A maximal chain of left modular elements, or None.

    DFS over upper covers restricted to left modular elements, smallest id
    first; elements from which the top is unreachable are remembered.
    """
    flags = left_modular_elements(L)
    if not (flags[L.bottom] and flags[L.top]):
        return None
    dead: Set[int] = set()

    def extend(path: List[int]) -> Optional[List[int]]:
        last = path[-1]
        if last == L.top:
            return path
        for c in L.upper_covers(last):
            if not flags[c] or c in dead:
                continue
            found = extend(path + [c])
            if found is not None:
                return found
            dead.add(c)
        return None

    found = extend([L.bottom])
    if found is None:
        return None
    return MaximalChain(L, tuple(found))


def has_left_modular_chain(L: Lattice) -> PropertyReport:
    """A left modular maximal chain as witness.

    Otherwise every maximal chain meets a non left modular element; the
    counterexample is the lexicographically first maximal chain together with
    its first such element x and a pair y <= z where M(x, y, z) fails.
    """
    chain = find_left_modular_chain(L)
    if chain is not None:
        return passed("left-modular", witness=chain)
    path = [L.bottom]
    while path[-1] != L.top:
        path.append(min(L.upper_covers(path[-1])))
    ys, zs = _comparable_pairs(L)
    for x in path:
        bad = _left_modular_violation(L, x, ys, zs)
        if bad is not None:
            y, z = bad
            return failed(
                "left-modular", {"chain": tuple(path), "element": x, "pair": bad},
                detail=f"no maximal chain of left modular elements; {x} on {tuple(path)} fails M({x}, {y}, {z})",
            )
    raise AssertionError("a maximal chain of left modular elements was missed")


# ---------------- induced chains ----------------
def induced_element(L: Lattice, x: int, y: int, z: int) -> int:
    """(y ∨ x) ∧ z, the image of x in the interval [y, z]."""
    L.check(x, y, z)
    if not L.leq[y, z]:
        raise NotComparable(y, z)
    return L.meet(L.join(y, x), z)


def induced_chain(L: Lattice, xchain: Chain, y: int, z: int) -> Chain:
    """Project a left modular maximal chain into [y, z], dropping repeats.

    Raises:
        NotComparable: y is not below z.
        NotLeftModularChain: xchain is not maximal or has a non left modular element.
    """
    L.check(y, z)
    if not L.leq[y, z]:
        raise NotComparable(y, z)
    if not isinstance(xchain, Chain) or xchain.lattice != L or not xchain.is_maximal():
        raise NotLeftModularChain("the chain to project must be a maximal chain of the same lattice")
    flags = left_modular_elements(L)
    bad = [x for x in xchain if not flags[x]]
    if bad:
        raise NotLeftModularChain(f"elements {bad} of {xchain.elements} are not left modular")

    projected: List[int] = []
    for x in xchain:
        e = induced_element(L, x, y, z)
        if not projected or projected[-1] != e:
            projected.append(e)
    return Chain(L, tuple(projected))

