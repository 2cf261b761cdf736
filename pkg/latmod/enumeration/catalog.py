"""
On-disk corpus of lattices keyed by canonical form.

Layout of a catalog directory::

    index.json            {"version": 1, "entries": {key_hex: {"file", "size", "flags"}}}
    <sha256(key)>.json    one lattice file per isomorphism class
"""

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from latmod.cli.lattice_file import read_lattice_file, write_lattice_file
from latmod.console import info, warn
from latmod.core.canonical import canonical_labeling
from latmod.core.lattice import Lattice
from latmod.errors import CatalogError, LatticeFileError
from latmod.properties.registry import PROPERTIES
from latmod.settings import load_settings

INDEX_NAME = "index.json"
INDEX_VERSION = 1

Predicate = Tuple[str, bool]


@dataclass(frozen=True)
class CatalogEntry:
    file: str
    size: int
    flags: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"file": self.file, "size": self.size, "flags": dict(sorted(self.flags.items()))}


@dataclass
class LatticeCatalog:
    """Canonical key (hex) -> entry, plus the lattices themselves once built or loaded."""

    directory: Path
    index: Dict[str, CatalogEntry] = field(default_factory=dict)
    lattices: Dict[str, Lattice] = field(default_factory=dict)

    def add(self, L: Lattice, flags: Optional[Dict[str, bool]] = None) -> str:
        key_hex = canonical_labeling(L)[0].hex()
        if key_hex not in self.index:
            self.index[key_hex] = CatalogEntry(lattice_file_name(key_hex), L.size, dict(flags or {}))
            self.lattices[key_hex] = L
        return key_hex

    def keys(self) -> List[str]:
        return list(self.index)

    def __len__(self) -> int:
        return len(self.index)

    def __contains__(self, key_hex: str) -> bool:
        return key_hex in self.index

    def __iter__(self) -> Iterator[Lattice]:
        for key_hex in self.index:
            yield self.lattices[key_hex]

    def items(self) -> Iterator[Tuple[str, Lattice]]:
        for key_hex in self.index:
            yield key_hex, self.lattices[key_hex]

    def sizes(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for entry in self.index.values():
            counts[entry.size] = counts.get(entry.size, 0) + 1
        return dict(sorted(counts.items()))


def lattice_file_name(key_hex: str) -> str:
    return hashlib.sha256(bytes.fromhex(key_hex)).hexdigest() + ".json"


def default_catalog_dir() -> Path:
    return load_settings().catalog_dir


# ---------------- predicates ----------------
def parse_predicate(text: str) -> Predicate:
    """``graded`` -> ("graded", True); ``!graded`` or ``not-graded`` -> ("graded", False)."""
    text = text.strip()
    expected = True
    for prefix in ("!", "not-", "not "):
        if text.startswith(prefix):
            text, expected = text[len(prefix):].strip(), False
            break
    if text not in PROPERTIES:
        raise ValueError(f"unknown property '{text}' (known: {', '.join(sorted(PROPERTIES))})")
    return text, expected


def compute_flags(L: Lattice, names: Iterable[str]) -> Dict[str, bool]:
    return {name: bool(PROPERTIES[name](L)) for name in names}


def filter_corpus(
    stream: Iterable[Lattice],
    predicates: Sequence[Union[str, Predicate]] = (),
    directory: Optional[Union[str, Path]] = None,
    record: Sequence[str] = (),
    progress: Optional[Callable[[Iterable[Lattice]], Iterable[Lattice]]] = None,
) -> LatticeCatalog:
    """Keep the lattices satisfying every predicate, caching the evaluated flags.

    Args:
        stream: lattices to filter (typically from enumerate_lattices).
        predicates: property names, optionally negated with ``!`` or ``not-``.
        directory: where the catalog will be saved (default from settings).
        record: extra property names whose flags are cached for every entry.
        progress: optional wrapper for the stream (e.g. a tqdm bar).
    """
    parsed = [parse_predicate(p) if isinstance(p, str) else p for p in predicates]
    names = list(dict.fromkeys([name for name, _ in parsed] + list(record)))
    for name in record:
        parse_predicate(name)
    catalog = LatticeCatalog(Path(directory) if directory is not None else default_catalog_dir())
    for L in (progress(stream) if progress else stream):
        flags: Dict[str, bool] = {}
        keep = True
        for name, expected in parsed:
            flags[name] = bool(PROPERTIES[name](L))
            if flags[name] != expected:
                keep = False
                break
        if keep:
            flags.update(compute_flags(L, [n for n in names if n not in flags]))
            catalog.add(L, flags)
    return catalog


# ---------------- persistence ----------------
def catalog_save(catalog: LatticeCatalog, directory: Optional[Union[str, Path]] = None) -> Path:
    """Write one file per lattice, then the index (written last)."""
    target = Path(directory) if directory is not None else catalog.directory
    try:
        target.mkdir(parents=True, exist_ok=True)
        for key_hex, entry in catalog.index.items():
            write_lattice_file(catalog.lattices[key_hex], target / entry.file,
                               metadata={"canonical_key": key_hex})
        index = {
            "version": INDEX_VERSION,
            "entries": {key_hex: entry.to_dict() for key_hex, entry in catalog.index.items()},
        }
        with open(target / INDEX_NAME, "w", encoding="utf-8") as f:
            json.dump(index, f, indent=1, sort_keys=True)
    except OSError as e:
        raise CatalogError(f"cannot write catalog: {e}", path=target) from e
    info(f"saved {len(catalog)} lattices to {target}")
    return target


def catalog_load(directory: Union[str, Path]) -> LatticeCatalog:
    """Load and revalidate every lattice named by the index.

    Raises:
        CatalogError: the index is missing or corrupt, a file is missing, or a
            stored lattice no longer has the key it is filed under.
    """
    directory = Path(directory)
    index_path = directory / INDEX_NAME
    try:
        with open(index_path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError:
        raise CatalogError(f"no catalog index at {index_path}", path=index_path)
    except json.JSONDecodeError as e:
        raise CatalogError(f"corrupt catalog index {index_path}: {e.msg} (line {e.lineno})", path=index_path)
    if not isinstance(raw, dict) or raw.get("version") != INDEX_VERSION or not isinstance(raw.get("entries"), dict):
        raise CatalogError(f"unsupported catalog index format in {index_path}", path=index_path)

    catalog = LatticeCatalog(directory)
    for key_hex, fields in raw["entries"].items():
        try:
            entry = CatalogEntry(str(fields["file"]), int(fields["size"]), dict(fields.get("flags", {})))
        except (KeyError, TypeError, ValueError):
            raise CatalogError(f"corrupt index entry for key {key_hex}", key=key_hex, path=index_path)
        path = directory / entry.file
        if not path.exists():
            raise CatalogError(f"catalog file for key {key_hex} is missing: {path}", key=key_hex, path=path)
        try:
            L = read_lattice_file(path)
        except LatticeFileError as e:
            raise CatalogError(f"catalog file for key {key_hex} is invalid: {e}", key=key_hex, path=path) from e
        if L.size != entry.size or canonical_labeling(L)[0].hex() != key_hex:
            raise CatalogError(f"catalog file {path} does not match key {key_hex}", key=key_hex, path=path)
        catalog.index[key_hex] = entry
        catalog.lattices[key_hex] = L
    if not catalog.index:
        warn(f"catalog at {directory} is empty")
    return catalog
