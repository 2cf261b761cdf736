"""Definition-level supersolvability: an M-chain generating distributive sublattices."""

from typing import Dict, FrozenSet, List, Optional, Sequence

from latmod.core.chains import MaximalChain, maximal_chains
from latmod.core.lattice import Lattice, sublattice_generated
from latmod.properties.checks import is_distributive_on, left_modular_elements
from latmod.properties.report import PropertyReport, failed, passed


def candidate_order(L: Lattice, chains: Sequence[MaximalChain]) -> List[MaximalChain]:
    """Chains sorted by decreasing number of left modular elements (stable)."""
    flags = left_modular_elements(L)
    return sorted(chains, key=lambda c: -sum(flags[e] for e in c))


def is_m_chain(
    L: Lattice,
    m: MaximalChain,
    chains: Optional[Sequence[MaximalChain]] = None,
    cache: Optional[Dict[FrozenSet[int], bool]] = None,
) -> Optional[MaximalChain]:
    """None if m is an M-chain, otherwise the first chain c whose sublattice with m is not distributive."""
    chains = maximal_chains(L) if chains is None else chains
    cache = {} if cache is None else cache
    for c in chains:
        generated = sublattice_generated(L, set(m) | set(c))
        ok = cache.get(generated)
        if ok is None:
            ok = cache[generated] = is_distributive_on(L, generated)
        if not ok:
            return c
    return None


def is_supersolvable(L: Lattice) -> PropertyReport:
    """Is there a maximal chain m with ⟨m ∪ c⟩ distributive for every maximal chain c?

    Only maximal chains c need checking: every chain extends to one and a
    sublattice of a distributive lattice is distributive. The witness is the
    first M-chain found; on failure the counterexample is the first candidate
    together with the chain that breaks it.
    """
    chains = maximal_chains(L)
    cache: Dict[FrozenSet[int], bool] = {}
    first_failure = None
    for m in candidate_order(L, chains):
        breaker = is_m_chain(L, m, chains, cache)
        if breaker is None:
            return passed("supersolvable", witness=m, detail=f"M-chain {m.elements}")
        if first_failure is None:
            first_failure = (m.elements, breaker.elements)
    return failed(
        "supersolvable", first_failure,
        detail=f"no M-chain among {len(chains)} maximal chains",
    )
