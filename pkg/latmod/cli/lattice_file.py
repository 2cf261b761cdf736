"""
Lattice files: JSON objects ``{"name"?, "size", "covers", "labels"?}``.

Covers are ``[a, b]`` pairs meaning a ⋖ b over ids 0..size-1. Files are
validated against ``lattice_file_schema.json`` and then rebuilt with
:func:`build_from_covers`, so every load revalidates the lattice.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Union

from jsonschema import ValidationError, validate

from latmod.core.lattice import Lattice, build_from_covers
from latmod.errors import LatticeError, LatticeFileSyntaxError, LatticeValidationError

SCHEMA_PATH = Path(__file__).parent / "lattice_file_schema.json"


@lru_cache(maxsize=1)
def _schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_lattice_json(data: Any) -> None:
    """Raise LatticeFileSyntaxError naming the offending field if data is not a lattice file."""
    try:
        validate(instance=data, schema=_schema())
    except ValidationError as e:
        field = "/".join(str(p) for p in e.absolute_path) or None
        raise LatticeFileSyntaxError(e.message, field=field)


def lattice_from_dict(data: Dict[str, Any]) -> Lattice:
    validate_lattice_json(data)
    try:
        return build_from_covers(
            data["size"],
            [tuple(edge) for edge in data["covers"]],
            name=data.get("name"),
            labels=data.get("labels"),
        )
    except LatticeError as e:
        raise LatticeValidationError(str(e)) from e


def parse_lattice_file(text: str) -> Lattice:
    """Parse the text of a lattice file.

    Raises:
        LatticeFileSyntaxError: not JSON, or not of the lattice file shape.
        LatticeValidationError: the covers do not describe a lattice.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LatticeFileSyntaxError(e.msg, line=e.lineno)
    return lattice_from_dict(data)


def read_lattice_file(path: Union[str, Path]) -> Lattice:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise LatticeFileSyntaxError(f"cannot read {path}: {e.strerror}")
    return parse_lattice_file(text)


def lattice_to_dict(L: Lattice, metadata: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {"size": L.size, "covers": [list(edge) for edge in L.covers]}
    if L.name:
        data["name"] = L.name
    if L.labels is not None:
        data["labels"] = list(L.labels)
    if metadata:
        data["metadata"] = dict(metadata)
    return data


def dump_lattice(L: Lattice, metadata: Optional[Dict[str, str]] = None) -> str:
    """Serialize with sorted keys so equal lattices give identical text."""
    return json.dumps(lattice_to_dict(L, metadata), sort_keys=True, ensure_ascii=False) + "\n"


def write_lattice_file(L: Lattice, path: Union[str, Path], metadata: Optional[Dict[str, str]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_lattice(L, metadata))
    return path
