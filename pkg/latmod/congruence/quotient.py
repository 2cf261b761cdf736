"""Quotient lattices and the maximum graded quotient g(L)."""

from typing import List, Optional, Tuple

import numpy as np

from latmod.congruence.congruence import Congruence, all_congruences, compatibility_violation, meet_all
from latmod.core.lattice import Lattice, build_from_order
from latmod.errors import IncompatiblePartition
from latmod.properties.checks import is_graded
from latmod.properties.report import PropertyReport, failed, passed

Projection = Tuple[int, ...]


def quotient(L: Lattice, theta: Congruence) -> Tuple[Lattice, Projection]:
    """L/θ with the projection a ↦ [a] (element ids are class indices).

    [a] <= [b] iff a ∨ b ≡ b.

    Raises:
        IncompatiblePartition: θ is not compatible with meet and join.
    """
    if theta.lattice != L:
        raise IncompatiblePartition("congruence belongs to a different lattice")
    bad = compatibility_violation(L, theta.class_of)
    if bad is not None:
        raise IncompatiblePartition(f"{bad[0]} ≡ {bad[1]} is not preserved by {bad[2]}", bad)

    cls = np.asarray(theta.class_of, dtype=np.intp)
    reps = np.array([block[0] for block in theta.classes()], dtype=np.intp)
    joins = L.join_table[np.ix_(reps, reps)]
    leq = cls[joins] == np.arange(len(reps))[None, :]
    labels = None
    if L.labels is not None:
        labels = ["[" + L.label(int(r)) + "]" for r in reps]
    name = f"{L.name}/θ" if L.name else None
    Q = build_from_order(len(reps), leq, name=name, labels=labels)
    return Q, theta.class_of


def graded_congruences(L: Lattice, cap: Optional[int] = None) -> List[Congruence]:
    """Congruences whose quotient is graded."""
    return [theta for theta in all_congruences(L, cap) if is_graded(quotient(L, theta)[0])]


def g_congruence(L: Lattice, cap: Optional[int] = None) -> Congruence:
    """a ∼ b iff every homomorphism to a graded lattice identifies them.

    Every homomorphic image is a quotient, so ∼ is the common refinement of
    all congruences with a graded quotient. The total congruence is always
    one of them.
    """
    return meet_all(L, graded_congruences(L, cap))


def maximum_graded_quotient(L: Lattice, cap: Optional[int] = None) -> Optional[Tuple[Lattice, Projection]]:
    """L/∼ when it is graded; None when L has no maximum graded quotient."""
    Q, projection = quotient(L, g_congruence(L, cap))
    if not is_graded(Q):
        return None
    return Q, projection


def lemma1_check(L: Lattice, cap: Optional[int] = None) -> PropertyReport:
    """Over Q = L/∼: if [x] ⪯ [y] ⪯ [z], [x] <= [u] <= [v] <= [z], [u] ∨ [y] = [z]
    and [v] ∧ [y] = [x], then [u] = [v].

    The counterexample is (x, y, z, u, v) in class ids of Q.
    """
    Q, _ = quotient(L, g_congruence(L, cap))
    M, J, leq = Q.meet_table, Q.join_table, Q.leq
    checked = 0
    for y in Q.elements:
        below = [x for x in Q.elements if Q.covers_or_equal(x, y)]
        above = [z for z in Q.elements if Q.covers_or_equal(y, z)]
        for x in below:
            for z in above:
                between = leq[x] & leq[:, z]
                us = np.flatnonzero(between & (J[:, y] == z))
                vs = np.flatnonzero(between & (M[:, y] == x))
                if not us.size or not vs.size:
                    continue
                checked += 1
                hits = np.argwhere(leq[np.ix_(us, vs)] & (us[:, None] != vs[None, :]))
                if hits.size:
                    i, j = hits[0]
                    witness = (x, y, z, int(us[i]), int(vs[j]))
                    return failed("lemma1", witness, detail=f"distinct u <= v in g(L): {witness}")
    return passed("lemma1", detail=f"{checked} configurations checked on a quotient of size {Q.size}")
