"""
Named lattice families.

Every family is addressable by name through :func:`named_lattice` (and by a
compact expression such as ``"product(chain(1),boolean(2))"`` through
:func:`lattice_from_spec`), which is how the CLI ``construct`` subcommand and
the tests reach them.
"""

import re
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors
from sympy.utilities.iterables import multiset_partitions

from latmod.core.lattice import Lattice, build_from_covers, build_from_order
from latmod.errors import ParamOutOfRange, UnknownFamily

MAX_BOOLEAN_RANK = 10
MAX_PARTITION_SET = 6
MAX_DIVISOR_NUMBER = 10 ** 9


# ---------------- small named lattices ----------------
def point() -> Lattice:
    """The one-element lattice."""
    return build_from_covers(1, [], name="point", labels=["p"])


def chain(k: int) -> Lattice:
    """0 ⋖ 1 ⋖ ... ⋖ k (k + 1 elements, rank k)."""
    _require(k, "k", low=0)
    return build_from_covers(k + 1, [(i, i + 1) for i in range(k)], name=f"chain({k})")


def boolean(n: int) -> Lattice:
    """Subsets of {1..n}; element id is the bitmask."""
    _require(n, "n", low=0, high=MAX_BOOLEAN_RANK)
    covers = [(mask, mask | (1 << b)) for mask in range(1 << n) for b in range(n) if not mask & (1 << b)]
    labels = ["{" + ",".join(str(b + 1) for b in range(n) if mask & (1 << b)) + "}" for mask in range(1 << n)]
    return build_from_covers(1 << n, covers, name=f"boolean({n})", labels=labels)


def diamond() -> Lattice:
    """M3: bottom, three atoms, top."""
    return build_from_covers(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        name="diamond", labels=["0̂", "a", "b", "c", "1̂"],
    )


def pentagon() -> Lattice:
    """N5: 0̂ ⋖ a ⋖ b ⋖ 1̂ and 0̂ ⋖ c ⋖ 1̂."""
    return build_from_covers(
        5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        name="pentagon", labels=["0̂", "a", "b", "c", "1̂"],
    )


def benzene() -> Lattice:
    """The hexagon: atoms a, b and coatoms c, d with a ⋖ c and b ⋖ d."""
    return build_from_covers(
        6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)],
        name="benzene", labels=["0̂", "a", "b", "c", "d", "1̂"],
    )


def figure1() -> Lattice:
    """Two chains glued at their ends: 0̂ < l1 < l2 < l3 < 1̂ and 0̂ < r1 < r2 < 1̂."""
    return build_from_covers(
        7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6), (6, 4)],
        name="figure1", labels=["0̂", "l1", "l2", "l3", "1̂", "r1", "r2"],
    )


# ---------------- partitions and divisors ----------------
def _refines(p: Sequence[frozenset], q: Sequence[frozenset]) -> bool:
    return all(any(block <= other for other in q) for block in p)


def partition_lattice(n: int) -> Lattice:
    """Set partitions of {1..n} ordered by refinement; bottom is all singletons."""
    _require(n, "n", low=1, high=MAX_PARTITION_SET)
    parts = [
        tuple(frozenset(block) for block in p)
        for p in multiset_partitions(list(range(1, n + 1)))
    ]
    parts.sort(key=lambda p: (-len(p), sorted(sorted(b) for b in p)))
    size = len(parts)
    leq = np.array([[_refines(p, q) for q in parts] for p in parts], dtype=bool)
    labels = ["|".join("".join(str(e) for e in sorted(b)) for b in sorted(p, key=min)) for p in parts]
    return build_from_order(size, leq, name=f"partition_lattice({n})", labels=labels)


def divisor_lattice(m: int) -> Lattice:
    """Divisors of m ordered by divisibility."""
    _require(m, "m", low=1, high=MAX_DIVISOR_NUMBER)
    divs = [int(d) for d in divisors(m)]
    leq = np.array([[b % a == 0 for b in divs] for a in divs], dtype=bool)
    return build_from_order(len(divs), leq, name=f"divisor_lattice({m})", labels=[str(d) for d in divs])


def product(left: Lattice, right: Lattice) -> Lattice:
    """Componentwise order on pairs; (a, b) has id a * |L2| + b."""
    L1, L2 = left, right
    n2 = L2.size
    covers = [(a * n2 + b, c * n2 + b) for a, c in L1.covers for b in range(n2)]
    covers += [(a * n2 + b, a * n2 + d) for a in range(L1.size) for b, d in L2.covers]
    labels = [f"({L1.label(a)},{L2.label(b)})" for a, b in cartesian(range(L1.size), range(n2))]
    name = f"product({L1.name or '?'},{L2.name or '?'})"
    return build_from_covers(L1.size * n2, covers, name=name, labels=labels)


# ---------------- free lattices on a chain and a point ----------------
def free_chain_point(k: int) -> Lattice:
    """Free lattice generated by a chain x0 < ... < xk and an incomparable point y.

    Only k = 0 (4 elements) and k = 1 (9 elements) are finite.
    """
    _require(k, "k", low=0, high=1)
    if k == 0:
        return build_from_covers(
            4, [(0, 1), (0, 2), (1, 3), (2, 3)],
            name="free_chain_point(0)", labels=["y∧x0", "x0", "y", "y∨x0"],
        )
    labels = [
        "y∧x0", "x0", "y∧x1", "y", "(y∧x1)∨x0",
        "(y∨x0)∧x1", "x1", "y∨x0", "y∨x1",
    ]
    covers = [
        (0, 1), (0, 2), (2, 3), (1, 4), (2, 4), (4, 5),
        (5, 6), (5, 7), (3, 7), (6, 8), (7, 8),
    ]
    return build_from_covers(9, covers, name="free_chain_point(1)", labels=labels)


def free_chain_point_generators(k: int) -> Dict[str, int]:
    """Element ids of the generators x0..xk and y in :func:`free_chain_point`."""
    _require(k, "k", low=0, high=1)
    if k == 0:
        return {"x0": 1, "y": 2}
    return {"x0": 1, "x1": 6, "y": 3}


# ---------------- registry ----------------
@dataclass(frozen=True)
class Family:
    name: str
    build: Callable[..., Lattice]
    params: Tuple[str, ...] = ()
    doc: str = ""


def _grid(k: int) -> Lattice:
    from latmod.constructions.grid import grid_quotient
    return grid_quotient(k)[0]


def _downsets(r: int, s: int) -> Lattice:
    from latmod.constructions.downsets import downset_lattice
    return downset_lattice(r, s)[0]


FAMILIES: Dict[str, Family] = {
    f.name: f for f in [
        Family("point", point, (), "one-element lattice"),
        Family("chain", chain, ("k",), "chain with k+1 elements"),
        Family("boolean", boolean, ("n",), "subsets of an n-set"),
        Family("diamond", diamond, (), "M3"),
        Family("pentagon", pentagon, (), "N5"),
        Family("benzene", benzene, (), "graded hexagon, not supersolvable"),
        Family("figure1", figure1, (), "two side chains of lengths 4 and 3"),
        Family("partition_lattice", partition_lattice, ("n",), "set partitions of an n-set"),
        Family("divisor_lattice", divisor_lattice, ("m",), "divisors of m"),
        Family("product", product, ("left", "right"), "product of two lattices"),
        Family("free_chain_point", free_chain_point, ("k",), "free lattice on a k-chain and a point, k <= 1"),
        Family("grid", _grid, ("k",), "the grid model G(k)"),
        Family("downsets", _downsets, ("r", "s"), "down-sets of the r x s grid"),
    ]
}

_ALIASES = {"M3": "diamond", "N5": "pentagon", "hexagon": "benzene", "S": "point"}


def named_lattice(family: str, params: Optional[Mapping[str, Any]] = None) -> Lattice:
    """Build a lattice of a named family.

    Args:
        family: a key of ``FAMILIES`` (or an alias such as ``N5``).
        params: parameter values by name; ``product`` takes two Lattices.

    Raises:
        UnknownFamily: no such family.
        ParamOutOfRange: a parameter is missing, unexpected or out of range.
    """
    fam = FAMILIES.get(_ALIASES.get(family, family))
    if fam is None:
        raise UnknownFamily(family, list(FAMILIES))
    params = dict(params or {})
    missing = [p for p in fam.params if p not in params]
    extra = [p for p in params if p not in fam.params]
    if missing or extra:
        raise ParamOutOfRange(
            f"{fam.name} takes ({', '.join(fam.params)}); "
            f"missing {missing or 'none'}, unexpected {extra or 'none'}"
        )
    return fam.build(**{p: params[p] for p in fam.params})


# ---------------- expressions ----------------
_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(-?\d+)|([(),=]))")


def _tokenize(text: str) -> List[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParamOutOfRange(f"cannot parse lattice expression '{text}' at offset {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


def lattice_from_spec(text: str) -> Lattice:
    """Parse ``family``, ``family(3)``, ``family(k=3)`` or nested ``product(a, b)``."""
    tokens = _tokenize(text)
    lattice, rest = _parse(tokens)
    if rest:
        raise ParamOutOfRange(f"trailing input in lattice expression '{text}'")
    return lattice


def _parse(tokens: List[str]) -> Tuple[Lattice, List[str]]:
    if not tokens or not tokens[0][0].isalpha() and tokens[0][0] != "_":
        raise ParamOutOfRange("expected a family name in lattice expression")
    name, rest = tokens[0], tokens[1:]
    fam = FAMILIES.get(_ALIASES.get(name, name))
    if fam is None:
        raise UnknownFamily(name, list(FAMILIES))
    args: List[Any] = []
    kwargs: Dict[str, Any] = {}
    if rest and rest[0] == "(":
        rest = rest[1:]
        while rest and rest[0] != ")":
            if len(rest) > 1 and rest[1] == "=":
                key, rest = rest[0], rest[2:]
                value, rest = _parse_value(rest)
                kwargs[key] = value
            else:
                value, rest = _parse_value(rest)
                args.append(value)
            if rest and rest[0] == ",":
                rest = rest[1:]
        if not rest:
            raise ParamOutOfRange("unbalanced parentheses in lattice expression")
        rest = rest[1:]
    if len(args) > len(fam.params):
        raise ParamOutOfRange(f"{fam.name} takes at most {len(fam.params)} arguments")
    params = dict(zip(fam.params, args))
    params.update(kwargs)
    return named_lattice(fam.name, params), rest


def _parse_value(tokens: List[str]) -> Tuple[Any, List[str]]:
    if not tokens:
        raise ParamOutOfRange("missing argument in lattice expression")
    head = tokens[0]
    if head.lstrip("-").isdigit():
        return int(head), tokens[1:]
    return _parse(tokens)


def _require(value: Any, name: str, low: Optional[int] = None, high: Optional[int] = None) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ParamOutOfRange(f"parameter {name} must be an integer, got {value!r}")
    if low is not None and value < low:
        raise ParamOutOfRange(f"parameter {name}={value} is below {low}")
    if high is not None and value > high:
        raise ParamOutOfRange(f"parameter {name}={value} is above {high}")
