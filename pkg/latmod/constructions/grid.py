"""
The grid model G(k) of the maximum graded quotient of a chain x0 < ... < xk
freely joined with one extra point y.

Elements are pairs (i, j) with -1 <= i <= k and max(i, 0) <= j <= k + 1,
ordered componentwise:

    (i, j), 0 <= i <= j <= k   stands for (y ∨ x_i) ∧ x_j
    (-1, j), j <= k            stands for y ∧ x_j
    (i, k + 1), i >= 0         stands for y ∨ x_i
    (-1, k + 1)                stands for y

The index i = -1 means "no join with y"; j = k + 1 means "no meet taken".
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from latmod.core.lattice import Lattice, build_from_covers
from latmod.errors import ParamOutOfRange

Cell = Tuple[int, int]


@dataclass(frozen=True)
class GridQuotient:
    """G(k) with its index set, realized lattice and generator map."""

    k: int
    index_set: Tuple[Cell, ...] = field(init=False)
    lattice: Lattice = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 0:
            raise ParamOutOfRange(f"grid parameter k must be a non-negative integer, got {self.k!r}")
        k = self.k
        cells = [(i, j) for i in range(-1, k + 1) for j in range(max(i, 0), k + 2)]
        # ids follow rank, then i; bottom (-1, 0) is 0 and top (k, k+1) is last
        cells.sort(key=lambda c: (c[0] + c[1], c[0]))
        object.__setattr__(self, "index_set", tuple(cells))
        index = {c: n for n, c in enumerate(cells)}
        covers = []
        for (i, j), n in index.items():
            for step in ((i + 1, j), (i, j + 1)):
                if step in index:
                    covers.append((n, index[step]))
        labels = [f"({i},{j})" for i, j in cells]
        object.__setattr__(
            self, "lattice",
            build_from_covers(len(cells), covers, name=f"grid({k})", labels=labels),
        )

    def element(self, i: int, j: int) -> int:
        """Element id of the cell (i, j)."""
        try:
            return self.index_set.index((i, j))
        except ValueError:
            raise ParamOutOfRange(f"({i}, {j}) is not a cell of G({self.k})")

    def cell(self, element: int) -> Cell:
        return self.index_set[element]

    def rank_of(self, cell: Cell) -> int:
        return cell[0] + cell[1] + 1

    @property
    def generators(self) -> Dict[str, int]:
        """x_i -> (i, i) and y -> (-1, k + 1)."""
        gens = {f"x{i}": self.element(i, i) for i in range(self.k + 1)}
        gens["y"] = self.element(-1, self.k + 1)
        return gens

    def chain_generators(self) -> List[int]:
        return [self.element(i, i) for i in range(self.k + 1)]

    @property
    def expected_size(self) -> int:
        return (self.k + 2) * (self.k + 5) // 2 - 1


def grid_quotient(k: int) -> Tuple[Lattice, Dict[str, int]]:
    """G(k) as a lattice together with its generator map (x0..xk, y)."""
    model = GridQuotient(k)
    return model.lattice, model.generators
