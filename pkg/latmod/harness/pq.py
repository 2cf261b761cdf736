"""
The chain identities P_t and Q_t.

For a maximal chain x, a decreasing sequence a_1 >= ... >= a_t taken from x,
and an increasing sequence b_1 <= ... <= b_t taken from a second chain y:

    P_t:  (b_1 ∨ a_1) ∧ ... ∧ (b_t ∨ a_t) = b_1 ∨ (a_1 ∧ b_2) ∨ ... ∨ (a_{t-1} ∧ b_t) ∨ a_t
    Q_t:  (a_1 ∧ b_1) ∨ ... ∨ (a_t ∧ b_t) = a_1 ∧ (b_1 ∨ a_2) ∧ ... ∧ (b_{t-1} ∨ a_t) ∧ b_t

Both hold whenever L is graded and x is a chain of left modular elements.
Sequences may repeat elements.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from latmod.core.chains import Chain, maximal_chains
from latmod.core.lattice import Lattice
from latmod.errors import InvalidChain
from latmod.properties.report import PropertyReport, failed, passed

ChainLike = Union[Chain, Sequence[int]]


@dataclass(frozen=True)
class PQViolation:
    identity: str
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    lhs: int
    rhs: int

    def to_dict(self):
        return {"identity": self.identity, "a": list(self.a), "b": list(self.b),
                "lhs": self.lhs, "rhs": self.rhs}


def _as_chain(L: Lattice, chain: ChainLike) -> Chain:
    return chain if isinstance(chain, Chain) else Chain(L, tuple(chain))


def p_sides(L: Lattice, a: Sequence[int], b: Sequence[int]) -> Tuple[int, int]:
    t = len(a)
    lhs = reduce(L.meet, (L.join(b[k], a[k]) for k in range(t)), L.top)
    terms = [b[0]] + [L.meet(a[k], b[k + 1]) for k in range(t - 1)] + [a[t - 1]]
    rhs = reduce(L.join, terms, L.bottom)
    return lhs, rhs


def q_sides(L: Lattice, a: Sequence[int], b: Sequence[int]) -> Tuple[int, int]:
    t = len(a)
    lhs = reduce(L.join, (L.meet(a[k], b[k]) for k in range(t)), L.bottom)
    terms = [a[0]] + [L.join(b[k], a[k + 1]) for k in range(t - 1)] + [b[t - 1]]
    rhs = reduce(L.meet, terms, L.top)
    return lhs, rhs


def decreasing_sequences(chain: Chain, t: int) -> Iterator[Tuple[int, ...]]:
    for idx in combinations_with_replacement(range(len(chain)), t):
        yield tuple(chain[i] for i in reversed(idx))


def increasing_sequences(chain: Chain, t: int) -> Iterator[Tuple[int, ...]]:
    for idx in combinations_with_replacement(range(len(chain)), t):
        yield tuple(chain[i] for i in idx)


def _side_tables(L: Lattice, A: np.ndarray, B: np.ndarray) -> Tuple[np.ndarray, ...]:
    """Both sides of P and Q for every (row of A, row of B), as (len(A), len(B)) tables."""
    M, J = L.meet_table, L.join_table
    t = A.shape[1]
    a = [A[:, None, k] for k in range(t)]
    b = [B[None, :, k] for k in range(t)]
    shape = (A.shape[0], B.shape[0])

    p_lhs = np.full(shape, L.top)
    q_lhs = np.full(shape, L.bottom)
    for k in range(t):
        p_lhs = M[p_lhs, J[b[k], a[k]]]
        q_lhs = J[q_lhs, M[a[k], b[k]]]
    p_rhs = np.broadcast_to(b[0], shape)
    q_rhs = np.broadcast_to(a[0], shape)
    for k in range(t - 1):
        p_rhs = J[p_rhs, M[a[k], b[k + 1]]]
        q_rhs = M[q_rhs, J[b[k], a[k + 1]]]
    p_rhs = J[p_rhs, a[t - 1]]
    q_rhs = M[q_rhs, b[t - 1]]
    return p_lhs, p_rhs, q_lhs, q_rhs


def pq_violations(L: Lattice, xchain: ChainLike, ychain: ChainLike, t: int) -> Iterator[PQViolation]:
    """Every failing (identity, a, b), a from xchain and b from ychain, a-major then P before Q."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    x = _as_chain(L, xchain)
    y = _as_chain(L, ychain)
    if not x.is_maximal():
        raise InvalidChain(f"{x.elements} is not a maximal chain")
    A = np.array(list(decreasing_sequences(x, t)), dtype=np.intp).reshape(-1, t)
    B = np.array(list(increasing_sequences(y, t)), dtype=np.intp).reshape(-1, t)
    p_lhs, p_rhs, q_lhs, q_rhs = _side_tables(L, A, B)
    for i, j in np.argwhere((p_lhs != p_rhs) | (q_lhs != q_rhs)):
        a, b = tuple(int(e) for e in A[i]), tuple(int(e) for e in B[j])
        if p_lhs[i, j] != p_rhs[i, j]:
            yield PQViolation(f"P{t}", a, b, int(p_lhs[i, j]), int(p_rhs[i, j]))
        if q_lhs[i, j] != q_rhs[i, j]:
            yield PQViolation(f"Q{t}", a, b, int(q_lhs[i, j]), int(q_rhs[i, j]))


def verify_pq(L: Lattice, xchain: ChainLike, ychain: ChainLike, t: int) -> PropertyReport:
    """P_t and Q_t over every pair of sequences; reports the first violation.

    ychain may be any chain of L.

    Raises:
        InvalidChain: xchain is not maximal.
    """
    name = f"P{t}/Q{t}"
    violation = next(pq_violations(L, xchain, ychain, t), None)
    if violation is None:
        return passed(name)
    return failed(
        name, violation.to_dict(),
        detail=f"{violation.identity} fails at a={violation.a}, b={violation.b}: "
               f"{L.label(violation.lhs)} != {L.label(violation.rhs)}",
    )


def verify_pq_all_chains(
    L: Lattice, xchain: ChainLike, max_t: int, ychains: Optional[Sequence[ChainLike]] = None
) -> PropertyReport:
    """verify_pq for t = 1..max_t against each ychain (default: every maximal chain)."""
    ys = maximal_chains(L) if ychains is None else list(ychains)
    for y in ys:
        for t in range(1, max_t + 1):
            report = verify_pq(L, xchain, y, t)
            if not report:
                return report
    return passed(f"P/Q up to t={max_t}", detail=f"{len(ys)} chains")


def repetition_consistency(L: Lattice, xchain: ChainLike, ychain: ChainLike, t: int) -> PropertyReport:
    """Repeating the last pair of a (t-1)-sequence must not change either side of P or Q."""
    name = f"P/Q repetition at t={t}"
    if t < 2:
        return passed(name)
    x = _as_chain(L, xchain)
    y = _as_chain(L, ychain)
    bs = list(increasing_sequences(y, t - 1))
    for a in decreasing_sequences(x, t - 1):
        for b in bs:
            a2, b2 = a + a[-1:], b + b[-1:]
            for identity, sides in (("P", p_sides), ("Q", q_sides)):
                if sides(L, a, b) != sides(L, a2, b2):
                    return failed(name, {"identity": identity, "a": list(a), "b": list(b)})
    return passed(name)

