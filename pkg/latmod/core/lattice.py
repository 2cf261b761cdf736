"""
Finite bounded lattices stored as dense tables.

Elements are the ids 0..n-1. ``leq[a, b]`` is True when a <= b, and
``meet_table[a, b]`` / ``join_table[a, b]`` hold the ids of a ∧ b and a ∨ b.
Every table is computed once at build time and is read-only afterwards, so a
Lattice can be shared freely between workers.
"""

from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from latmod.errors import (
    CycleDetected,
    InvalidElement,
    LatticeError,
    NotALattice,
    NotComparable,
    RedundantCover,
)

Pair = Tuple[int, int]


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class Lattice:
    """A validated finite bounded lattice. Build it with :func:`build_from_covers`."""

    __slots__ = (
        "size", "covers", "leq", "meet_table", "join_table", "height",
        "bottom", "top", "name", "labels", "_upper", "_lower", "_cover_set",
    )

    def __init__(
        self,
        size: int,
        covers: Tuple[Pair, ...],
        leq: np.ndarray,
        meet_table: np.ndarray,
        join_table: np.ndarray,
        height: np.ndarray,
        name: Optional[str] = None,
        labels: Optional[Tuple[str, ...]] = None,
    ):
        self.size = size
        self.covers = covers
        self.leq = _read_only(leq)
        self.meet_table = _read_only(meet_table)
        self.join_table = _read_only(join_table)
        self.height = _read_only(height)
        self.name = name
        self.labels = labels
        self.bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(leq.all(axis=0))[0])

        upper: List[List[int]] = [[] for _ in range(size)]
        lower: List[List[int]] = [[] for _ in range(size)]
        for a, b in covers:
            upper[a].append(b)
            lower[b].append(a)
        self._upper = tuple(tuple(sorted(u)) for u in upper)
        self._lower = tuple(tuple(sorted(l)) for l in lower)
        self._cover_set = frozenset(covers)

    # ---------- basic queries ----------
    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def rank(self) -> int:
        """Length of the longest chain from bottom to top."""
        return int(self.height[self.top])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    def is_cover(self, a: int, b: int) -> bool:
        return (a, b) in self._cover_set

    def covers_or_equal(self, a: int, b: int) -> bool:
        """a ⪯ b: either a ⋖ b or a = b."""
        return a == b or (a, b) in self._cover_set

    def upper_covers(self, a: int) -> Tuple[int, ...]:
        return self._upper[a]

    def lower_covers(self, a: int) -> Tuple[int, ...]:
        return self._lower[a]

    def down_set(self, a: int) -> np.ndarray:
        return np.flatnonzero(self.leq[:, a])

    def up_set(self, a: int) -> np.ndarray:
        return np.flatnonzero(self.leq[a])

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def check(self, *elements: int) -> None:
        for e in elements:
            if not isinstance(e, (int, np.integer)) or not 0 <= e < self.size:
                raise InvalidElement(e, self.size)

    # ---------- dunder ----------
    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.size == other.size and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.size, self.covers))

    def __repr__(self) -> str:
        name = f" '{self.name}'" if self.name else ""
        return f"<Lattice{name} size={self.size} rank={self.rank} covers={len(self.covers)}>"


# ---------------- construction ----------------
def _order_from_graph(n: int, graph: nx.DiGraph) -> Tuple[np.ndarray, List[int]]:
    try:
        order = list(nx.topological_sort(graph))
    except nx.NetworkXUnfeasible:
        raise CycleDetected(nx.find_cycle(graph))

    leq = np.eye(n, dtype=bool)
    for a in reversed(order):
        for b in graph.successors(a):
            leq[a] |= leq[b]
    return leq, order


def _check_reduction(leq: np.ndarray, graph: nx.DiGraph) -> None:
    for a in sorted(graph.nodes):
        succ = sorted(graph.successors(a))
        if len(succ) < 2:
            continue
        between = leq[np.ix_(succ, succ)]
        np.fill_diagonal(between, False)
        hit = np.argwhere(between)
        if hit.size:
            i, j = hit[0]
            raise RedundantCover((a, succ[j]), via=succ[i])


def _meet_table(leq: np.ndarray) -> Tuple[Optional[np.ndarray], Optional[Pair]]:
    """Meets via down-set intersection; returns the first pair without a unique maximum."""
    n = leq.shape[0]
    down = leq.T  # down[a, c]: c <= a
    down_count = down.sum(axis=1)
    table = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        common = down[a] & down
        count = common.sum(axis=1)
        candidates = common & (down_count[None, :] == count[:, None])
        hits = candidates.sum(axis=1)
        bad = np.flatnonzero(hits != 1)
        if bad.size:
            return None, (a, int(bad[0]))
        table[a] = candidates.argmax(axis=1)
    return table, None


def _heights(n: int, order: Sequence[int], lower: Dict[int, List[int]]) -> np.ndarray:
    height = np.zeros(n, dtype=np.intp)
    for b in order:
        for a in lower.get(b, ()):
            if height[a] + 1 > height[b]:
                height[b] = height[a] + 1
    return height


def build_from_covers(
    n: int,
    covers: Iterable[Sequence[int]],
    name: Optional[str] = None,
    labels: Optional[Sequence[str]] = None,
) -> Lattice:
    """Validate a cover list and return the lattice with all derived tables.

    Args:
        n: number of elements (ids 0..n-1).
        covers: pairs (a, b) meaning a ⋖ b. Must be exactly the transitive
            reduction of the order they generate.
        name: optional display name.
        labels: optional per-element display labels.

    Raises:
        InvalidElement: an id outside 0..n-1.
        CycleDetected: the covers contain a cycle (or a self loop).
        RedundantCover: an edge is listed twice or implied by transitivity.
        NotALattice: some pair has no unique join or meet.
    """
    if n < 1:
        raise LatticeError("a lattice needs at least one element")
    if labels is not None and len(labels) != n:
        raise LatticeError(f"expected {n} labels, got {len(labels)}")

    edges: List[Pair] = []
    for pair in covers:
        if len(pair) != 2:
            raise LatticeError(f"cover {pair!r} is not a pair")
        a, b = pair
        for e in (a, b):
            if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or not 0 <= e < n:
                raise InvalidElement(e, n)
        if a == b:
            raise CycleDetected([(int(a), int(b))])
        edges.append((int(a), int(b)))

    duplicate = next((e for e, count in Counter(edges).items() if count > 1), None)
    if duplicate is not None:
        raise RedundantCover(duplicate)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    leq, order = _order_from_graph(n, graph)
    _check_reduction(leq, graph)

    join_table, bad = _meet_table(leq.T)
    if bad is not None:
        note = "" if leq.all(axis=0).any() else "no top element"
        raise NotALattice("join", bad, note)
    meet_table, bad = _meet_table(leq)
    if bad is not None:
        note = "" if leq.all(axis=1).any() else "no bottom element"
        raise NotALattice("meet", bad, note)

    lower: Dict[int, List[int]] = {}
    for a, b in edges:
        lower.setdefault(b, []).append(a)
    height = _heights(n, order, lower)

    return Lattice(
        size=n,
        covers=tuple(sorted(edges)),
        leq=leq,
        meet_table=meet_table,
        join_table=join_table,
        height=height,
        name=name,
        labels=tuple(labels) if labels is not None else None,
    )


def covers_of_order(leq: np.ndarray) -> List[Pair]:
    """Transitive reduction of a (reflexive) order matrix."""
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    s = strict.astype(np.int64)
    implied = (s @ s) > 0
    return [(int(a), int(b)) for a, b in np.argwhere(strict & ~implied)]


def build_from_order(
    n: int,
    leq: np.ndarray,
    name: Optional[str] = None,
    labels: Optional[Sequence[str]] = None,
) -> Lattice:
    """Build a lattice from a full n×n order matrix (leq[a, b] iff a <= b)."""
    leq = np.asarray(leq, dtype=bool)
    if leq.shape != (n, n):
        raise LatticeError(f"order matrix has shape {leq.shape}, expected {(n, n)}")
    if not leq.diagonal().all():
        raise LatticeError("order matrix is not reflexive")
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        a, b = np.argwhere(both)[0]
        raise CycleDetected([(int(a), int(b)), (int(b), int(a))])
    s = leq.astype(np.int64)
    if ((s @ s > 0) & ~leq).any():
        raise LatticeError("order matrix is not transitive")
    return build_from_covers(n, covers_of_order(leq), name=name, labels=labels)


# ---------------- elementary operations ----------------
def meet(L: Lattice, a: int, b: int) -> int:
    L.check(a, b)
    return L.meet(a, b)


def join(L: Lattice, a: int, b: int) -> int:
    L.check(a, b)
    return L.join(a, b)


def relabel(L: Lattice, perm: Sequence[int], name: Optional[str] = None) -> Lattice:
    """Copy of L with element ``a`` renamed ``perm[a]``."""
    n = L.size
    if sorted(perm) != list(range(n)):
        raise LatticeError("relabeling is not a permutation of the element ids")
    covers = [(perm[a], perm[b]) for a, b in L.covers]
    labels = None
    if L.labels is not None:
        labels = [""] * n
        for a in range(n):
            labels[perm[a]] = L.labels[a]
    return build_from_covers(n, covers, name=name or L.name, labels=labels)


def dual(L: Lattice) -> Lattice:
    """Same ids, reversed covers; meet and join swap roles."""
    name = f"dual({L.name})" if L.name else None
    return build_from_covers(L.size, [(b, a) for a, b in L.covers], name=name, labels=L.labels)


def interval(L: Lattice, y: int, z: int) -> Tuple[Lattice, Tuple[int, ...]]:
    """The interval [y, z] as a lattice, with its embedding (new id -> old id)."""
    L.check(y, z)
    if not L.leq[y, z]:
        raise NotComparable(y, z)
    members = tuple(int(w) for w in np.flatnonzero(L.leq[y] & L.leq[:, z]))
    index = {w: i for i, w in enumerate(members)}
    covers = [(index[a], index[b]) for a, b in L.covers if a in index and b in index]
    labels = [L.label(w) for w in members] if L.labels is not None else None
    return build_from_covers(len(members), covers, labels=labels), members


def sublattice_generated(L: Lattice, generators: Iterable[int]) -> FrozenSet[int]:
    """Least subset containing the generators that is closed under meet and join.

    Each round adds all pairwise meets and joins of the current set (the sets
    T_0 ⊆ T_1 ⊆ ... of the closure construction) until nothing new appears.
    """
    gens = [int(g) for g in generators]
    L.check(*gens)
    current = np.zeros(L.size, dtype=bool)
    current[gens] = True
    count = int(current.sum())
    while count:
        ids = np.flatnonzero(current)
        block = np.ix_(ids, ids)
        current[L.meet_table[block].ravel()] = True
        current[L.join_table[block].ravel()] = True
        new_count = int(current.sum())
        if new_count == count:
            break
        count = new_count
    return frozenset(int(i) for i in np.flatnonzero(current))


def is_closed(L: Lattice, elements: Iterable[int]) -> bool:
    """True when the set is closed under pairwise meet and join."""
    ids = np.fromiter(elements, dtype=np.intp)
    if ids.size == 0:
        return True
    inside = np.zeros(L.size, dtype=bool)
    inside[ids] = True
    block = np.ix_(ids, ids)
    return bool(inside[L.meet_table[block]].all() and inside[L.join_table[block]].all())


def sublattice_covers(L: Lattice, elements: Iterable[int]) -> List[Pair]:
    """Cover relation of the sub-poset of L induced on the given elements."""
    ids = np.array(sorted(set(int(e) for e in elements)), dtype=np.intp)
    if ids.size == 0:
        return []
    sub = L.leq[np.ix_(ids, ids)]
    return [(int(ids[a]), int(ids[b])) for a, b in covers_of_order(sub)]
