"""JSON reports printed by ``--json``: {suite, lattice_key, verdict, witnesses, timings}."""

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

from jsonschema import ValidationError, validate

from latmod.core.canonical import canonical_labeling
from latmod.core.lattice import Lattice
from latmod.errors import LatmodError

SCHEMA_PATH = Path(__file__).parent / "report_schema.json"


class ReportSchemaError(LatmodError):
    """A report does not match the published schema."""
    pass


@lru_cache(maxsize=1)
def _schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_report(data: Dict[str, Any]) -> None:
    try:
        validate(instance=data, schema=_schema())
    except ValidationError as e:
        raise ReportSchemaError(f"report schema validation error: {e.message}")


def lattice_key(L: Lattice) -> str:
    return canonical_labeling(L)[0].hex()


@dataclass
class Report:
    suite: str
    lattice_key: Optional[str] = None
    verdict: bool = True
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    summary: Optional[Dict[str, Any]] = None

    @contextmanager
    def timed(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "lattice_key": self.lattice_key,
            "verdict": bool(self.verdict),
            "witnesses": list(self.witnesses),
            "timings": dict(self.timings),
        }
        if self.summary is not None:
            data["summary"] = self.summary
        return data

    def dumps(self) -> str:
        data = self.to_dict()
        validate_report(data)
        return json.dumps(data, indent=2, ensure_ascii=False)
