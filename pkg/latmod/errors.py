"""Exception hierarchy shared by every latmod module."""

from typing import Any, Optional, Sequence, Tuple


class LatmodError(Exception):
    """Base class for all latmod errors."""
    pass


# ---------------- lattice-core ----------------
class LatticeError(LatmodError):
    """Raised when a cover list or an element reference is invalid."""
    pass


class InvalidElement(LatticeError):
    """An element id outside 0..n-1."""

    def __init__(self, element: Any, size: int):
        self.element = element
        self.size = size
        super().__init__(f"element {element!r} is not an id in 0..{size - 1}")


class CycleDetected(LatticeError):
    """The cover relation contains a directed cycle, so it is not a poset."""

    def __init__(self, cycle: Sequence[Tuple[int, int]]):
        self.cycle = tuple(tuple(edge) for edge in cycle)
        path = " -> ".join(str(a) for a, _ in self.cycle)
        super().__init__(f"covers contain a cycle: {path} -> {self.cycle[0][0]}")


class NotALattice(LatticeError):
    """Some pair lacks a unique meet or join, or there is no bottom/top."""

    def __init__(self, reason: str, pair: Optional[Tuple[int, int]] = None, note: str = ""):
        self.reason = reason
        self.pair = pair
        suffix = f" ({note})" if note else ""
        if pair is not None:
            super().__init__(f"{pair[0]} and {pair[1]} have no {reason}{suffix}")
        else:
            super().__init__(reason + suffix)


class RedundantCover(LatticeError):
    """A supplied edge is implied by transitivity (or supplied twice)."""

    def __init__(self, edge: Tuple[int, int], via: Optional[int] = None):
        self.edge = tuple(edge)
        self.via = via
        if via is None:
            super().__init__(f"cover {self.edge} is listed more than once")
        else:
            super().__init__(f"cover {self.edge} is redundant: {edge[0]} < {via} < {edge[1]}")


class NotComparable(LatticeError):
    """An operation needing y <= z was given an incomparable or reversed pair."""

    def __init__(self, y: int, z: int):
        self.pair = (y, z)
        super().__init__(f"{y} is not below {z}")


class InvalidChain(LatticeError):
    """A sequence that is not a (maximal) chain where one was required."""
    pass


# ---------------- property-checks ----------------
class NotLeftModularChain(LatmodError):
    """The chain handed to a left-modular construction fails its precondition."""
    pass


# ---------------- congruence-engine ----------------
class IncompatiblePartition(LatmodError):
    """A partition that is not compatible with meet and join."""

    def __init__(self, message: str, witness: Optional[Tuple[int, ...]] = None):
        self.witness = witness
        super().__init__(message)


class TooLarge(LatmodError):
    """A configured size cap was exceeded."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds the cap of {cap}")


# ---------------- constructions ----------------
class UnknownFamily(LatmodError):
    """The requested named lattice family does not exist."""

    def __init__(self, family: str, known: Sequence[str] = ()):
        self.family = family
        hint = f" (known: {', '.join(sorted(known))})" if known else ""
        super().__init__(f"unknown lattice family '{family}'{hint}")


class ParamOutOfRange(LatmodError):
    """A family parameter is missing or outside its documented range."""
    pass


# ---------------- enumeration ----------------
class CapExceeded(LatmodError):
    """Enumeration asked for sizes beyond the configured cap."""

    def __init__(self, requested: int, cap: int):
        self.requested = requested
        self.cap = cap
        super().__init__(f"max size {requested} exceeds the enumeration cap {cap}")


class CatalogError(LatmodError):
    """A catalog directory or index entry is missing or corrupt."""

    def __init__(self, message: str, key: Optional[str] = None, path: Any = None):
        self.key = key
        self.path = path
        super().__init__(message)


# ---------------- theorem-harness ----------------
class DimensionMismatch(LatmodError):
    """A down-set over the wrong grid was handed to phi/psi."""
    pass


class HypothesisFailed(LatmodError):
    """A check was run on input that does not meet its hypotheses."""
    pass


# ---------------- cli-io ----------------
class LatticeFileError(LatmodError):
    """Base class for lattice file problems."""
    pass


class LatticeFileSyntaxError(LatticeFileError):
    """The file is not JSON of the lattice file shape."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class LatticeValidationError(LatticeFileError):
    """The file parsed but does not describe a valid lattice."""
    pass
