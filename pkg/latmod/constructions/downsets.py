"""Down-closed subsets of the grid [1, r] x [1, s] ordered by inclusion."""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from latmod.core.lattice import Lattice, build_from_covers
from latmod.errors import ParamOutOfRange, TooLarge
from latmod.settings import load_settings

Cell = Tuple[int, int]


@dataclass(frozen=True)
class DownSet:
    """A down-closed set of cells (i, j), 1 <= i <= r, 1 <= j <= s."""

    r: int
    s: int
    members: FrozenSet[Cell]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset((int(i), int(j)) for i, j in self.members))
        for i, j in self.members:
            if not (1 <= i <= self.r and 1 <= j <= self.s):
                raise ParamOutOfRange(f"cell ({i}, {j}) lies outside the {self.r}x{self.s} grid")
            if (i > 1 and (i - 1, j) not in self.members) or (j > 1 and (i, j - 1) not in self.members):
                raise ParamOutOfRange(f"{sorted(self.members)} is not down-closed at ({i}, {j})")

    @classmethod
    def from_row_lengths(cls, r: int, s: int, lengths) -> "DownSet":
        """Row i holds the cells (i, 1..lengths[i-1]); lengths must be non-increasing."""
        return cls(r, s, frozenset((i + 1, j + 1) for i, n in enumerate(lengths) for j in range(n)))

    @property
    def row_lengths(self) -> Tuple[int, ...]:
        return tuple(sum(1 for (i, _) in self.members if i == row) for row in range(1, self.r + 1))

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "DownSet") -> bool:
        return self.members <= other.members

    def __or__(self, other: "DownSet") -> "DownSet":
        return DownSet(self.r, self.s, self.members | other.members)

    def __and__(self, other: "DownSet") -> "DownSet":
        return DownSet(self.r, self.s, self.members & other.members)


def downset_count(r: int, s: int) -> int:
    """Number of down-sets of the r x s grid: binomial(r + s, r)."""
    return comb(r + s, r)


def downset_shapes(r: int, s: int) -> List[Tuple[int, ...]]:
    """Row lengths of every down-set, smallest first, then lexicographically."""
    shapes = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(s + 1), r)]
    shapes.sort(key=lambda lengths: (sum(lengths), lengths))
    return shapes


def iter_downsets(r: int, s: int) -> Iterator[DownSet]:
    """All down-sets, smallest first, then by row lengths."""
    for lengths in downset_shapes(r, s):
        yield DownSet.from_row_lengths(r, s, lengths)


def downset_lattice(r: int, s: int, cap: Optional[int] = None) -> Tuple[Lattice, Dict[DownSet, int]]:
    """The distributive lattice of down-sets of [1, r] x [1, s].

    Covers add a single cell, so the rank of a down-set is its cardinality.

    Raises:
        ParamOutOfRange: r or s below 1.
        TooLarge: more than ``cap`` elements (default from settings).
    """
    for name, value in (("r", r), ("s", s)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ParamOutOfRange(f"grid dimension {name} must be a positive integer, got {value!r}")
    if cap is None:
        cap = load_settings().downset_element_cap
    if downset_count(r, s) > cap:
        raise TooLarge(f"down-set lattice of the {r}x{s} grid ({downset_count(r, s)} elements)", cap)

    elements = list(iter_downsets(r, s))
    index = {d: n for n, d in enumerate(elements)}
    by_lengths = {d.row_lengths: n for d, n in index.items()}
    covers = []
    for d, n in index.items():
        lengths = list(d.row_lengths)
        for row in range(r):
            if lengths[row] < s and (row == 0 or lengths[row - 1] > lengths[row]):
                bigger = lengths[:]
                bigger[row] += 1
                covers.append((n, by_lengths[tuple(bigger)]))
    labels = ["{" + ",".join(f"{i}.{j}" for i, j in sorted(d.members)) + "}" for d in elements]
    lattice = build_from_covers(len(elements), covers, name=f"downsets({r},{s})", labels=labels)
    return lattice, index
