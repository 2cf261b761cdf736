"""Verdicts with witnesses or counterexamples."""

from dataclasses import dataclass, field
from typing import Any, Dict

import numpy as np


def _plain(value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "elements") and not isinstance(value, (tuple, list, set, frozenset)):
        return [int(e) for e in value.elements]
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return [_plain(v) for v in value]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property or lemma check.

    A true verdict may carry a witness (existential properties); a false
    verdict carries a counterexample that re-evaluates to a violation.
    ``applicable`` is False when the hypotheses of a lemma did not hold, in
    which case the verdict is vacuously True.
    """

    name: str
    verdict: bool
    witness: Any = None
    counterexample: Any = None
    applicable: bool = True
    detail: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.name,
            "verdict": self.verdict,
            "applicable": self.applicable,
            "witness": _plain(self.witness),
            "counterexample": _plain(self.counterexample),
            "detail": self.detail,
        }


def passed(name: str, witness: Any = None, detail: str = "") -> PropertyReport:
    return PropertyReport(name, True, witness=witness, detail=detail)


def failed(name: str, counterexample: Any, detail: str = "") -> PropertyReport:
    return PropertyReport(name, False, counterexample=counterexample, detail=detail)


def not_applicable(name: str, detail: str) -> PropertyReport:
    return PropertyReport(name, True, applicable=False, detail=detail)
