"""Chains and maximal chains of a finite lattice."""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Tuple

from latmod.core.lattice import Lattice
from latmod.errors import InvalidChain, NotComparable


@dataclass(frozen=True)
class Chain:
    """A strictly increasing sequence of element ids of ``lattice``."""

    lattice: Lattice
    elements: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(e) for e in self.elements))
        if not self.elements:
            raise InvalidChain("a chain needs at least one element")
        self.lattice.check(*self.elements)
        for a, b in zip(self.elements, self.elements[1:]):
            if not self.lattice.lt(a, b):
                raise InvalidChain(f"{a} < {b} fails in chain {self.elements}")

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def is_maximal(self) -> bool:
        L = self.lattice
        return (
            self.elements[0] == L.bottom
            and self.elements[-1] == L.top
            and all(L.is_cover(a, b) for a, b in zip(self.elements, self.elements[1:]))
        )

    def is_saturated(self) -> bool:
        """Every consecutive pair is a cover (endpoints unrestricted)."""
        L = self.lattice
        return all(L.is_cover(a, b) for a, b in zip(self.elements, self.elements[1:]))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> int:
        return self.elements[i]


@dataclass(frozen=True)
class MaximalChain(Chain):
    """bottom = x_0 ⋖ x_1 ⋖ ... ⋖ x_r = top."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_maximal():
            raise InvalidChain(f"{self.elements} is not a maximal chain")


def _chains_between(L: Lattice, y: int, z: int) -> Iterator[Tuple[int, ...]]:
    # DFS over upper covers in increasing id order, staying below z.
    stack: List[Tuple[int, ...]] = [(y,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == z:
            yield path
            continue
        nxt = [c for c in L.upper_covers(last) if L.leq[c, z]]
        for c in reversed(nxt):
            stack.append(path + (c,))


def maximal_chains_between(L: Lattice, y: int, z: int) -> List[Chain]:
    """All saturated chains from y to z, in lexicographic id order."""
    L.check(y, z)
    if not L.leq[y, z]:
        raise NotComparable(y, z)
    return [Chain(L, path) for path in _chains_between(L, y, z)]


def maximal_chains(L: Lattice) -> List[MaximalChain]:
    """All maximal chains of L, in lexicographic id order."""
    return [MaximalChain(L, path) for path in _chains_between(L, L.bottom, L.top)]


def all_chains(L: Lattice, min_length: int = 0) -> Iterator[Chain]:
    """Every chain of L (any nonempty totally ordered subset), shortest first."""
    n = L.size
    for size in range(min_length + 1, n + 1):
        for subset in combinations(range(n), size):
            ordered = sorted(subset, key=lambda e: (int(L.height[e]), e))
            if all(L.lt(a, b) for a, b in zip(ordered, ordered[1:])):
                yield Chain(L, tuple(ordered))
