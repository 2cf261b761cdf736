"""
Executable checks of the structural facts about left modular elements the
supersolvability argument relies on. Each check evaluates its own
hypotheses first and reports not applicable when they fail.

    quotient-cover   g(L) rules out distinct u <= v squeezed by a cover pair
    cover-shift      u ⋖ v left modular => u ∨ z ⪯ v ∨ z and u ∧ z ⪯ v ∧ z
    interval-lm      x left modular, y < z => (y ∨ x) ∧ z left modular in [y, z]
    interval-chain   a left modular maximal chain projects to one in every [y, z]
    chain-modular    graded + left modular chain x => M(w, x_i, x_j) for i < j
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from latmod.core.chains import MaximalChain
from latmod.core.lattice import Lattice, sublattice_covers, sublattice_generated
from latmod.congruence.quotient import lemma1_check
from latmod.properties.checks import (
    find_left_modular_chain,
    induced_chain,
    is_graded,
    left_modular_elements,
    modular_triple,
)
from latmod.properties.report import PropertyReport, failed, not_applicable, passed


@dataclass
class LemmaSuite:
    """Reports of one lattice, in a fixed order."""

    lattice: str
    reports: List[PropertyReport] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(r.verdict for r in self.reports)

    def __bool__(self) -> bool:
        return self.verdict

    def failures(self) -> List[PropertyReport]:
        return [r for r in self.reports if not r.verdict]

    def to_dict(self) -> Dict:
        return {"lattice": self.lattice, "verdict": self.verdict,
                "reports": [r.to_dict() for r in self.reports]}


class _IntervalLM:
    """Memoized left modularity of an element inside an interval [y, z]."""

    def __init__(self, L: Lattice):
        self.L = L
        self.memo: Dict[Tuple[int, int, int], bool] = {}

    def __call__(self, e: int, y: int, z: int) -> bool:
        key = (e, y, z)
        if key not in self.memo:
            L = self.L
            members = np.flatnonzero(L.leq[y] & L.leq[:, z])
            s, t = np.nonzero(L.leq[np.ix_(members, members)])
            s, t = members[s], members[t]
            lhs = L.meet_table[L.join_table[s, e], t]
            rhs = L.join_table[s, L.meet_table[e, t]]
            self.memo[key] = bool(np.all(lhs == rhs))
        return self.memo[key]


def rank_function_inherited(L: Lattice, K: Iterable[int]) -> bool:
    """Every cover of the sub-poset K is a cover of L."""
    return all(L.is_cover(a, b) for a, b in sublattice_covers(L, K))


# ---------------- individual checks ----------------
def check_cover_shift(L: Lattice) -> PropertyReport:
    name = "cover-shift"
    flags = left_modular_elements(L)
    pairs = [(u, v) for u, v in L.covers if flags[u] and flags[v]]
    if not pairs:
        return not_applicable(name, "no cover between two left modular elements")
    for u, v in pairs:
        for z in L.elements:
            if not L.covers_or_equal(L.join(u, z), L.join(v, z)):
                return failed(name, (u, v, z), detail=f"{u}∨{z} is not covered by {v}∨{z}")
            if not L.covers_or_equal(L.meet(u, z), L.meet(v, z)):
                return failed(name, (u, v, z), detail=f"{u}∧{z} is not covered by {v}∧{z}")
    return passed(name, detail=f"{len(pairs)} cover pairs")


def check_interval_lm(L: Lattice, interval_lm: Optional[_IntervalLM] = None) -> PropertyReport:
    name = "interval-lm"
    interval_lm = interval_lm or _IntervalLM(L)
    flags = left_modular_elements(L)
    lm = [x for x in L.elements if flags[x]]
    ys, zs = np.nonzero(L.leq & ~np.eye(L.size, dtype=bool))
    for x in lm:
        for y, z in zip(ys.tolist(), zs.tolist()):
            e = L.meet(L.join(y, x), z)
            if not interval_lm(e, y, z):
                return failed(name, (x, y, z), detail=f"({y}∨{x})∧{z} = {e} is not left modular in [{y},{z}]")
    return passed(name, detail=f"{len(lm)} left modular elements")


def check_interval_chain(
    L: Lattice, chain: Optional[MaximalChain], interval_lm: Optional[_IntervalLM] = None
) -> PropertyReport:
    name = "interval-chain"
    if chain is None:
        return not_applicable(name, "no left modular maximal chain")
    interval_lm = interval_lm or _IntervalLM(L)
    ys, zs = np.nonzero(L.leq)
    for y, z in zip(ys.tolist(), zs.tolist()):
        projected = induced_chain(L, chain, y, z)
        if projected[0] != y or projected[-1] != z or not projected.is_saturated():
            return failed(name, (y, z), detail=f"projection {projected.elements} is not maximal in [{y},{z}]")
        bad = [e for e in projected if not interval_lm(e, y, z)]
        if bad:
            return failed(name, (y, z), detail=f"{bad} not left modular in [{y},{z}]")
    return passed(name, witness=chain)


def check_chain_modular(L: Lattice, chain: Optional[MaximalChain]) -> PropertyReport:
    """M(w, x_i, x_j) for all w and i < j, and the sublattice <x ∪ {w}> keeps L's rank."""
    name = "chain-modular"
    if chain is None:
        return not_applicable(name, "no left modular maximal chain")
    if not is_graded(L):
        return not_applicable(name, "lattice is not graded")
    x = chain.elements
    for w in L.elements:
        K = sublattice_generated(L, set(x) | {w})
        if not rank_function_inherited(L, K):
            return failed(name, (w,), detail=f"<chain ∪ {{{w}}}> has a cover that is not a cover of L")
        for i in range(len(x)):
            for j in range(i + 1, len(x)):
                if not modular_triple(L, w, x[i], x[j]):
                    return failed(name, (w, x[i], x[j]), detail=f"M({w}, {x[i]}, {x[j]}) fails")
    return passed(name, witness=chain)


def verify_lemma_suite(L: Lattice, cap: Optional[int] = None) -> LemmaSuite:
    """Run every check on L; cap bounds the congruence search of the quotient check."""
    chain = find_left_modular_chain(L)
    interval_lm = _IntervalLM(L)
    q = lemma1_check(L, cap)
    suite = LemmaSuite(L.name or f"lattice of size {L.size}")
    suite.reports.append(PropertyReport("quotient-cover", q.verdict, q.witness, q.counterexample,
                                        q.applicable, q.detail))
    suite.reports.append(check_cover_shift(L))
    suite.reports.append(check_interval_lm(L, interval_lm))
    suite.reports.append(check_interval_chain(L, chain, interval_lm))
    suite.reports.append(check_chain_modular(L, chain))
    return suite

