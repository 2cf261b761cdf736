"""
Down-set homomorphisms from the distributive lattice D of down-sets of
[1, r] x [1, s] onto the sublattice generated by two maximal chains.

With u[i, j] = x_i ∧ y_j and v[i, j] = x_i ∨ y_j,

    phi(I) = join of u[i, j] over (i, j) in I       (empty join: bottom)
    psi(I) = meet of v[i-1, j-1] over (i, j) not in I  (empty meet: top)

When x is an M-chain both maps agree and form a surjective lattice
homomorphism D -> <x ∪ y>, which certifies that the generated sublattice is
distributive.
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from latmod.constructions.downsets import DownSet, downset_count, downset_shapes
from latmod.core.chains import Chain, MaximalChain, maximal_chains
from latmod.core.lattice import Lattice, sublattice_generated
from latmod.errors import DimensionMismatch, TooLarge
from latmod.properties.checks import is_distributive_on
from latmod.settings import load_settings


@dataclass(frozen=True)
class UVTables:
    """u[i, j] = x_i ∧ y_j and v[i, j] = x_i ∨ y_j for two maximal chains."""

    lattice: Lattice
    xchain: Tuple[int, ...]
    ychain: Tuple[int, ...]
    u: np.ndarray = field(init=False, repr=False, compare=False)
    v: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        L = self.lattice
        for chain in (self.xchain, self.ychain):
            MaximalChain(L, tuple(chain))
        x = np.asarray(self.xchain, dtype=np.intp)
        y = np.asarray(self.ychain, dtype=np.intp)
        u = L.meet_table[np.ix_(x, y)].copy()
        v = L.join_table[np.ix_(x, y)].copy()
        u.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "xchain", tuple(int(e) for e in self.xchain))
        object.__setattr__(self, "ychain", tuple(int(e) for e in self.ychain))
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def r(self) -> int:
        return len(self.xchain) - 1

    @property
    def s(self) -> int:
        return len(self.ychain) - 1

    def u_elements(self) -> FrozenSet[int]:
        return frozenset(int(e) for e in self.u[1:, 1:].ravel())

    def v_elements(self) -> FrozenSet[int]:
        return frozenset(int(e) for e in self.v[:-1, :-1].ravel())


def _check_dims(tables: UVTables, I: DownSet) -> None:
    if (I.r, I.s) != (tables.r, tables.s):
        raise DimensionMismatch(
            f"down-set over a {I.r}x{I.s} grid given for chains of ranks {tables.r} and {tables.s}"
        )


def phi(tables: UVTables, I: DownSet) -> int:
    """Join of u[i, j] over the cells of I."""
    _check_dims(tables, I)
    L = tables.lattice
    return reduce(L.join, (int(tables.u[i, j]) for i, j in sorted(I.members)), L.bottom)


def psi(tables: UVTables, I: DownSet) -> int:
    """Meet of v[i-1, j-1] over the cells outside I."""
    _check_dims(tables, I)
    L = tables.lattice
    outside = [(i, j) for i in range(1, tables.r + 1) for j in range(1, tables.s + 1) if (i, j) not in I.members]
    return reduce(L.meet, (int(tables.v[i - 1, j - 1]) for i, j in outside), L.top)


def join_closure(L: Lattice, elements) -> FrozenSet[int]:
    """All joins of subsets (the empty join is the bottom)."""
    found = {L.bottom} | set(int(e) for e in elements)
    frontier = list(found)
    while frontier:
        a = frontier.pop()
        for b in list(found):
            c = L.join(a, b)
            if c not in found:
                found.add(c)
                frontier.append(c)
    return frozenset(found)


def meet_closure(L: Lattice, elements) -> FrozenSet[int]:
    """All meets of subsets (the empty meet is the top)."""
    found = {L.top} | set(int(e) for e in elements)
    frontier = list(found)
    while frontier:
        a = frontier.pop()
        for b in list(found):
            c = L.meet(a, b)
            if c not in found:
                found.add(c)
                frontier.append(c)
    return frozenset(found)


# ---------------- certification ----------------
@dataclass(frozen=True)
class YChainRecord:
    """Evidence for one maximal chain y against the M-chain."""

    ychain: Tuple[int, ...]
    dims: Tuple[int, int]
    downsets: int
    image: FrozenSet[int]


@dataclass(frozen=True)
class SupersolvabilityCertificate:
    mchain: Tuple[int, ...]
    records: Tuple[YChainRecord, ...]

    def to_dict(self) -> Dict:
        return {
            "mchain": list(self.mchain),
            "ychains": [
                {"ychain": list(r.ychain), "dims": list(r.dims), "downsets": r.downsets,
                 "image": sorted(r.image)}
                for r in self.records
            ],
        }


@dataclass(frozen=True)
class CertificationFailure:
    """The first check that failed, with the chain and down-sets involved."""

    ychain: Tuple[int, ...]
    check: str
    downsets: Tuple[Tuple[Tuple[int, int], ...], ...] = ()
    detail: str = ""

    def to_dict(self) -> Dict:
        return {
            "ychain": list(self.ychain),
            "check": self.check,
            "downsets": [[list(cell) for cell in d] for d in self.downsets],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CertificationResult:
    certificate: Optional[SupersolvabilityCertificate] = None
    failure: Optional[CertificationFailure] = None

    def __bool__(self) -> bool:
        return self.certificate is not None


class DownSetIndex:
    """Down-sets of the r x s grid as row-length vectors, with lookup by vector.

    Intersection and union are the elementwise min and max of row lengths.
    """

    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        shapes = downset_shapes(r, s)
        self.lengths = np.array(shapes, dtype=np.intp).reshape(len(shapes), r)
        self.weights = (s + 1) ** np.arange(r, dtype=np.int64)
        codes = self.lengths @ self.weights
        self.order = np.argsort(codes)
        self.sorted_codes = codes[self.order]

    def __len__(self) -> int:
        return len(self.lengths)

    def index_of(self, lengths: np.ndarray) -> np.ndarray:
        codes = lengths @ self.weights
        return self.order[np.searchsorted(self.sorted_codes, codes)]

    def join_irreducibles(self) -> List[int]:
        """Principal down-sets: rows 1..i of length j."""
        r, s = self.r, self.s
        shapes = [[j if row < i else 0 for row in range(r)] for i in range(1, r + 1) for j in range(1, s + 1)]
        if not shapes:
            return []
        return [int(n) for n in self.index_of(np.array(shapes, dtype=np.intp).reshape(-1, r))]

    def meet_irreducibles(self) -> List[int]:
        """Everything except the cells (i', j') with i' >= i and j' >= j."""
        r, s = self.r, self.s
        shapes = [[s if row < i - 1 else j - 1 for row in range(r)] for i in range(1, r + 1) for j in range(1, s + 1)]
        if not shapes:
            return []
        return [int(n) for n in self.index_of(np.array(shapes, dtype=np.intp).reshape(-1, r))]

    def cells(self, n: int) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(DownSet.from_row_lengths(self.r, self.s, self.lengths[n]).members))


def phi_psi_all(tables: UVTables, shapes: DownSetIndex) -> Tuple[np.ndarray, np.ndarray]:
    """phi and psi of every down-set at once.

    u grows along rows, so phi only needs the last cell (i, l_i) of each row;
    v grows too, so psi only needs the first missing cell (i, l_i + 1).
    """
    L = tables.lattice
    lam = shapes.lengths
    phis = np.full(len(shapes), L.bottom, dtype=np.intp)
    psis = np.full(len(shapes), L.top, dtype=np.intp)
    for row in range(tables.r):
        phis = L.join_table[phis, tables.u[row + 1, lam[:, row]]]
        open_row = lam[:, row] < tables.s
        term = np.where(open_row, tables.v[row, np.minimum(lam[:, row], tables.s - 1)], L.top)
        psis = L.meet_table[psis, term]
    return phis, psis


def _certify_ychain(
    L: Lattice, tables: UVTables, shapes: DownSetIndex, mchain: Sequence[int]
) -> Tuple[Optional[YChainRecord], Optional[CertificationFailure]]:
    y = tables.ychain
    phis, psis = phi_psi_all(tables, shapes)

    bad = np.flatnonzero(phis != psis)
    if bad.size:
        n = int(bad[0])
        return None, CertificationFailure(
            y, "phi=psi", (shapes.cells(n),),
            f"phi = {L.label(phis[n])} but psi = {L.label(psis[n])}",
        )

    # Pairs with an irreducible down-set suffice: every down-set is a union
    # of principal down-sets and an intersection of complements of principal
    # up-sets.
    lam = shapes.lengths
    for name, combine, table, irreducibles in (
        ("meet", np.minimum, L.meet_table, shapes.meet_irreducibles()),
        ("join", np.maximum, L.join_table, shapes.join_irreducibles()),
    ):
        for n in irreducibles:
            other = shapes.index_of(combine(lam[n], lam))
            hom = phis[other] == table[phis[n], phis]
            if not hom.all():
                m = int(np.flatnonzero(~hom)[0])
                return None, CertificationFailure(
                    y, f"phi preserves {name}", (shapes.cells(n), shapes.cells(m)),
                    f"phi of the {name} is {L.label(phis[other[m]])}, "
                    f"the {name} of the images is {L.label(table[phis[n], phis[m]])}",
                )

    # monotone along every cover I ⋖ I + (i, l_i + 1)
    for row in range(tables.r):
        grows = lam[:, row] < tables.s
        if row:
            grows &= lam[:, row - 1] > lam[:, row]
        below = np.flatnonzero(grows)
        bigger = lam[below].copy()
        bigger[:, row] += 1
        above = shapes.index_of(bigger)
        ok = L.leq[phis[below], phis[above]]
        if not ok.all():
            k = int(np.flatnonzero(~ok)[0])
            return None, CertificationFailure(
                y, "phi monotone", (shapes.cells(int(below[k])), shapes.cells(int(above[k]))))

    image = frozenset(int(e) for e in phis)
    generated = sublattice_generated(L, set(mchain) | set(y))
    if image != generated:
        return None, CertificationFailure(
            y, "image", (), f"image {sorted(image)} differs from generated sublattice {sorted(generated)}"
        )
    if not is_distributive_on(L, image):
        return None, CertificationFailure(y, "image distributive", (), f"image {sorted(image)}")

    joins_of_u = join_closure(L, tables.u_elements())
    meets_of_v = meet_closure(L, tables.v_elements())
    if not joins_of_u == meets_of_v == image:
        return None, CertificationFailure(
            y, "joins of U equal meets of V", (),
            f"joins of U {sorted(joins_of_u)}, meets of V {sorted(meets_of_v)}, image {sorted(image)}",
        )
    return YChainRecord(y, (tables.r, tables.s), len(shapes), image), None


def certify_supersolvable(
    L: Lattice,
    mchain: Sequence[int],
    ychains: Optional[Sequence[Chain]] = None,
    cell_cap: Optional[int] = None,
) -> CertificationResult:
    """Check, for every maximal chain y, that phi = psi is a homomorphism from D onto <m ∪ y>.

    Args:
        L: the lattice.
        mchain: the candidate M-chain (must be maximal).
        ychains: chains to check against (default: every maximal chain).
        cell_cap: largest r * s allowed (default from settings).

    Raises:
        InvalidChain: mchain is not a maximal chain.
        TooLarge: a down-set grid has more than cell_cap cells or more
            down-sets than the configured element cap.
    """
    settings = load_settings()
    cell_cap = settings.downset_cell_cap if cell_cap is None else cell_cap
    m = tuple(int(e) for e in mchain)
    MaximalChain(L, m)
    ys = maximal_chains(L) if ychains is None else list(ychains)

    grids: Dict[Tuple[int, int], DownSetIndex] = {}
    records: List[YChainRecord] = []
    for ychain in ys:
        tables = UVTables(L, m, tuple(ychain))
        r, s = tables.r, tables.s
        if r * s > cell_cap:
            raise TooLarge(f"down-set grid {r}x{s}", cell_cap)
        if downset_count(r, s) > settings.downset_element_cap:
            raise TooLarge(f"down-set lattice of the {r}x{s} grid", settings.downset_element_cap)
        if (r, s) not in grids:
            grids[(r, s)] = DownSetIndex(r, s)
        record, failure = _certify_ychain(L, tables, grids[(r, s)], m)
        if failure is not None:
            return CertificationResult(failure=failure)
        records.append(record)
    return CertificationResult(certificate=SupersolvabilityCertificate(m, tuple(records)))
