"""
Corpus check: a finite lattice is supersolvable exactly when it is graded and
has a maximal chain of left modular elements. Whenever the left side holds,
the found chain is also certified as an M-chain through the down-set
homomorphism.
"""

import multiprocessing
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from latmod.cli.lattice_file import write_lattice_file
from latmod.console import info, warn
from latmod.constructions.families import (
    boolean,
    chain,
    divisor_lattice,
    partition_lattice,
    product,
)
from latmod.constructions.grid import grid_quotient
from latmod.core.canonical import canonical_labeling
from latmod.core.lattice import Lattice, build_from_covers
from latmod.enumeration.catalog import LatticeCatalog
from latmod.errors import TooLarge
from latmod.harness.birkhoff import certify_supersolvable
from latmod.properties.checks import find_left_modular_chain, is_graded
from latmod.properties.supersolvable import is_supersolvable
from latmod.settings import load_settings

Job = Tuple[str, Optional[str], int, Tuple[Tuple[int, int], ...]]


@dataclass(frozen=True)
class LatticeVerdict:
    key: str
    name: Optional[str]
    size: int
    graded: bool
    left_modular: bool
    supersolvable: bool
    mchain: Optional[Tuple[int, ...]] = None
    certified: Optional[bool] = None
    failure: Optional[Dict] = None

    @property
    def violation(self) -> Optional[str]:
        if (self.graded and self.left_modular) != self.supersolvable:
            return "equivalence"
        if self.certified is False:
            return "certification"
        return None


@dataclass
class Theorem1Summary:
    per_size: Dict[int, Dict[str, int]] = field(default_factory=dict)
    violations: List[LatticeVerdict] = field(default_factory=list)
    uncertified: List[Dict] = field(default_factory=list)
    triage_files: List[Path] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(row["total"] for row in self.per_size.values())

    @property
    def verdict(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "total": self.total,
            "per_size": {str(n): row for n, row in sorted(self.per_size.items())},
            "violations": [
                {"key": v.key, "name": v.name, "kind": v.violation, "graded": v.graded,
                 "left_modular": v.left_modular, "supersolvable": v.supersolvable,
                 "failure": v.failure}
                for v in self.violations
            ],
            "uncertified": list(self.uncertified),
        }


def classify(job: Job) -> LatticeVerdict:
    """Evaluate both sides of the equivalence on one lattice (runs in worker processes)."""
    key, name, size, covers = job
    L = build_from_covers(size, covers, name=name)
    graded = bool(is_graded(L))
    lm_chain = find_left_modular_chain(L)
    supersolvable = bool(is_supersolvable(L))
    verdict = LatticeVerdict(key, name, size, graded, lm_chain is not None, supersolvable)
    if not (graded and lm_chain is not None):
        return verdict
    try:
        result = certify_supersolvable(L, lm_chain.elements)
    except TooLarge as e:
        return LatticeVerdict(key, name, size, graded, True, supersolvable, lm_chain.elements,
                              None, {"check": "skipped", "detail": str(e)})
    failure = None if result else result.failure.to_dict()
    return LatticeVerdict(key, name, size, graded, True, supersolvable, lm_chain.elements,
                          bool(result), failure)


def _jobs(source: Union[LatticeCatalog, Iterable[Lattice]]) -> Tuple[List[Job], Dict[str, Lattice]]:
    pairs = source.items() if isinstance(source, LatticeCatalog) else (
        (canonical_labeling(L)[0].hex(), L) for L in source)
    lattices: Dict[str, Lattice] = {}
    for key, L in pairs:
        lattices.setdefault(key, L)
    ordered = sorted(lattices.items(), key=lambda item: (item[1].size, item[0]))
    jobs = [(key, L.name, L.size, L.covers) for key, L in ordered]
    return jobs, lattices


def _triage(L: Lattice, verdict: LatticeVerdict, directory: Path) -> Path:
    path = directory / f"{verdict.key[:16]}.json"
    write_lattice_file(L, path, metadata={
        "freetext_desc": f"{verdict.violation} violation: graded={verdict.graded}, "
                         f"left_modular={verdict.left_modular}, supersolvable={verdict.supersolvable}",
        "canonical_key": verdict.key,
    })
    warn(f"{verdict.violation} violation on {verdict.name or verdict.key[:16]}; dumped to {path}")
    return path


def verify_theorem1(
    source: Union[LatticeCatalog, Iterable[Lattice]],
    workers: Optional[int] = None,
    triage_dir: Optional[Union[str, Path]] = None,
    progress: Optional[Callable[[Iterable], Iterable]] = None,
) -> Theorem1Summary:
    """(graded and left modular chain) <=> supersolvable over every lattice of source.

    Results are merged in (size, canonical key) order whatever the worker
    count. Every violation is dumped as a lattice file under triage_dir.

    Args:
        source: a catalog, or any iterable of lattices (duplicates are merged).
        workers: process count (default from settings).
        triage_dir: where offending lattices are written (default from settings).
        progress: optional wrapper for the result stream (e.g. a tqdm bar).
    """
    settings = load_settings()
    workers = settings.workers if workers is None else workers
    triage_dir = Path(triage_dir) if triage_dir is not None else settings.triage_dir
    jobs, lattices = _jobs(source)

    if workers > 1 and len(jobs) > 1:
        pool = multiprocessing.Pool(processes=workers)
        try:
            verdicts = pool.map(classify, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        verdicts = (classify(job) for job in jobs)

    summary = Theorem1Summary()
    for v in (progress(verdicts) if progress else verdicts):
        row = summary.per_size.setdefault(
            v.size, {"total": 0, "graded": 0, "left_modular": 0, "supersolvable": 0, "certified": 0})
        row["total"] += 1
        row["graded"] += v.graded
        row["left_modular"] += v.left_modular
        row["supersolvable"] += v.supersolvable
        row["certified"] += bool(v.certified)
        if v.certified is None and v.graded and v.left_modular:
            summary.uncertified.append({"key": v.key, "name": v.name, "size": v.size,
                                        "reason": (v.failure or {}).get("detail", "")})
        if v.violation is not None:
            summary.violations.append(v)
            summary.triage_files.append(_triage(lattices[v.key], v, triage_dir))
    info(f"checked {summary.total} lattices, {len(summary.violations)} violations")
    for skipped in summary.uncertified:
        warn(f"certification of {skipped['name'] or skipped['key'][:16]} skipped: {skipped['reason']}")
    return summary


def family_controls() -> List[Lattice]:
    """Named lattices checked alongside the enumerated corpus."""
    controls = [boolean(n) for n in range(1, 5)]
    controls += [partition_lattice(n) for n in range(1, 5)]
    controls += [divisor_lattice(m) for m in (12, 30, 36, 60, 72)]
    controls += [grid_quotient(k)[0] for k in range(0, 6)]
    controls += [product(chain(a), chain(b)) for a, b in ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3))]
    return controls
