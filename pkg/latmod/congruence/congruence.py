"""
Lattice congruences as partitions of the element ids.

A congruence is stored as ``class_of``: the class index of every element,
numbered by first occurrence (element 0 is always in class 0), so two
congruences are equal exactly when their ``class_of`` tuples are.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from networkx.utils import UnionFind
from sympy.utilities.iterables import multiset_partitions

from latmod.core.lattice import Lattice
from latmod.errors import IncompatiblePartition, TooLarge
from latmod.settings import load_settings


def _normalize(labels: Sequence) -> Tuple[int, ...]:
    renumber: Dict = {}
    return tuple(renumber.setdefault(c, len(renumber)) for c in labels)


@dataclass(frozen=True)
class Congruence:
    """A partition of L's elements compatible with meet and join."""

    lattice: Lattice
    class_of: Tuple[int, ...]

    def __post_init__(self):
        if len(self.class_of) != self.lattice.size:
            raise IncompatiblePartition(
                f"partition covers {len(self.class_of)} elements, lattice has {self.lattice.size}"
            )
        object.__setattr__(self, "class_of", _normalize(self.class_of))

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    def classes(self) -> List[Tuple[int, ...]]:
        blocks: List[List[int]] = [[] for _ in range(self.num_classes)]
        for a, c in enumerate(self.class_of):
            blocks[c].append(a)
        return [tuple(b) for b in blocks]

    def same(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def refines(self, other: "Congruence") -> bool:
        """Every class of self lies inside a class of other."""
        image: Dict[int, int] = {}
        for mine, theirs in zip(self.class_of, other.class_of):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def is_equality(self) -> bool:
        return self.num_classes == self.lattice.size

    def is_total(self) -> bool:
        return self.num_classes == 1

    def to_list(self) -> List[int]:
        return list(self.class_of)

    def __repr__(self) -> str:
        return f"Congruence({'|'.join(','.join(map(str, b)) for b in self.classes())})"


# ---------------- compatibility ----------------
def compatibility_violation(L: Lattice, class_of: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) with a ≡ b but a∧c ≢ b∧c or a∨c ≢ b∨c, else None."""
    cls = np.asarray(class_of, dtype=np.intp)
    M, J = L.meet_table, L.join_table
    first: Dict[int, int] = {}
    for b in L.elements:
        a = first.setdefault(int(cls[b]), b)
        if a == b:
            continue
        bad = np.flatnonzero((cls[M[a]] != cls[M[b]]) | (cls[J[a]] != cls[J[b]]))
        if bad.size:
            return a, b, int(bad[0])
    return None


def as_congruence(L: Lattice, class_of: Sequence[int]) -> Congruence:
    """Wrap a partition, checking that it is compatible with meet and join."""
    bad = compatibility_violation(L, class_of)
    if bad is not None:
        a, b, c = bad
        raise IncompatiblePartition(
            f"{a} ≡ {b} but their meets or joins with {c} fall in different classes", bad
        )
    return Congruence(L, tuple(class_of))


# ---------------- generation ----------------
def _closure(L: Lattice, uf: UnionFind, pending: Iterable[Tuple[int, int]]) -> Tuple[int, ...]:
    # Only pairs that actually merge two classes need their translates pushed.
    M, J = L.meet_table, L.join_table
    queue = deque(pending)
    while queue:
        x, y = queue.popleft()
        if uf[x] == uf[y]:
            continue
        uf.union(x, y)
        queue.extend(zip(M[x].tolist(), M[y].tolist()))
        queue.extend(zip(J[x].tolist(), J[y].tolist()))
    return _normalize([uf[a] for a in L.elements])


def congruence_from_pairs(L: Lattice, pairs: Iterable[Tuple[int, int]]) -> Congruence:
    """Least congruence identifying every given pair."""
    pairs = [(int(a), int(b)) for a, b in pairs]
    for a, b in pairs:
        L.check(a, b)
    uf = UnionFind(L.elements)
    return Congruence(L, _closure(L, uf, pairs))


def principal_congruence(L: Lattice, a: int, b: int) -> Congruence:
    """Least congruence with a ≡ b."""
    return congruence_from_pairs(L, [(a, b)])


def equality_congruence(L: Lattice) -> Congruence:
    return Congruence(L, tuple(L.elements))


def total_congruence(L: Lattice) -> Congruence:
    return Congruence(L, (0,) * L.size)


def congruence_join(theta: Congruence, phi: Congruence) -> Congruence:
    """Transitive closure of the union of two congruences (again a congruence)."""
    L = theta.lattice
    uf = UnionFind(L.elements)
    for partition in (theta, phi):
        for block in partition.classes():
            uf.union(*block)
    return Congruence(L, _normalize([uf[a] for a in L.elements]))


def congruence_meet(theta: Congruence, phi: Congruence) -> Congruence:
    """Common refinement: a ≡ b iff both congruences identify them."""
    return Congruence(theta.lattice, _normalize(list(zip(theta.class_of, phi.class_of))))


def meet_all(L: Lattice, congruences: Iterable[Congruence]) -> Congruence:
    result = total_congruence(L)
    for theta in congruences:
        result = congruence_meet(result, theta)
    return result


# ---------------- enumeration ----------------
def cover_congruences(L: Lattice) -> List[Congruence]:
    """Distinct principal congruences of the covers, in cover order."""
    seen: Dict[Tuple[int, ...], Congruence] = {}
    for a, b in L.covers:
        theta = principal_congruence(L, a, b)
        seen.setdefault(theta.class_of, theta)
    return list(seen.values())


def all_congruences(L: Lattice, cap: Optional[int] = None) -> List[Congruence]:
    """Every congruence of L, finest first.

    Each congruence is the join of the cover-principal congruences it
    contains, so a frontier search over joins with those seeds, starting
    from equality, reaches all of them.

    Raises:
        TooLarge: more than ``cap`` congruences (default from settings).
    """
    cap = load_settings().congruence_cap if cap is None else cap
    seeds = cover_congruences(L)
    start = equality_congruence(L)
    found: Dict[Tuple[int, ...], Congruence] = {start.class_of: start}
    frontier = deque([start])
    while frontier:
        theta = frontier.popleft()
        for seed in seeds:
            if seed.refines(theta):
                continue
            joined = congruence_join(theta, seed)
            if joined.class_of in found:
                continue
            found[joined.class_of] = joined
            if len(found) > cap:
                raise TooLarge(f"number of congruences of {L!r}", cap)
            frontier.append(joined)
    return sorted(found.values(), key=lambda t: (-t.num_classes, t.class_of))


def brute_force_congruences(L: Lattice) -> List[Congruence]:
    """All set partitions of the elements filtered by compatibility (small L only)."""
    out = []
    for blocks in multiset_partitions(list(L.elements)):
        class_of = [0] * L.size
        for index, block in enumerate(blocks):
            for a in block:
                class_of[a] = index
        if compatibility_violation(L, class_of) is None:
            out.append(Congruence(L, tuple(class_of)))
    return sorted(out, key=lambda t: (-t.num_classes, t.class_of))
