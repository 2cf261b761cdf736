"""
Settings loader.

Defaults live in ``latmod/config/latmod.json`` and are validated against
``latmod_config_schema.json``. Environment overrides (a ``.env`` file is
honoured):

    LATMOD_CONFIG   path to an alternative settings file
    LATMOD_CACHE    catalog directory
"""

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv
from jsonschema import ValidationError, validate

from latmod.errors import LatmodError

load_dotenv()

CONFIG_DIR = Path(__file__).parent / "config"
DEFAULT_CONFIG_PATH = CONFIG_DIR / "latmod.json"
CONFIG_SCHEMA_PATH = CONFIG_DIR / "latmod_config_schema.json"


class SettingsError(LatmodError):
    """The settings file is missing or does not match its schema."""
    pass


@dataclass(frozen=True)
class Settings:
    congruence_cap: int
    enumeration_cap: int
    downset_element_cap: int
    downset_cell_cap: int
    pq_max_t: int
    triage_dir: Path
    workers: int
    catalog_dir: Path


def validate_settings_json(data: Dict[str, Any]) -> None:
    """Validate a settings document against the bundled JSON Schema."""
    with open(CONFIG_SCHEMA_PATH, "r", encoding="utf-8") as f:
        schema = json.load(f)
    try:
        validate(instance=data, schema=schema)
    except ValidationError as e:
        raise SettingsError(f"settings schema validation error: {e.message}")


def _read_settings(path: Path) -> Settings:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise SettingsError(f"cannot read settings file {path}: {e}")
    except json.JSONDecodeError as e:
        raise SettingsError(f"settings file {path} is not JSON: {e}")

    validate_settings_json(data)
    caps, harness, runtime = data["caps"], data["harness"], data["runtime"]

    catalog_dir = os.getenv("LATMOD_CACHE") or runtime["catalog_dir"]
    return Settings(
        congruence_cap=caps["congruence_cap"],
        enumeration_cap=caps["enumeration_cap"],
        downset_element_cap=caps["downset_element_cap"],
        downset_cell_cap=caps["downset_cell_cap"],
        pq_max_t=harness["pq_max_t"],
        triage_dir=Path(harness["triage_dir"]).expanduser(),
        workers=runtime["workers"],
        catalog_dir=Path(catalog_dir).expanduser(),
    )


@lru_cache(maxsize=1)
def _cached_settings() -> Settings:
    path = os.getenv("LATMOD_CONFIG") or DEFAULT_CONFIG_PATH
    return _read_settings(Path(path))


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Return the active settings; an explicit path bypasses the cache."""
    if path is not None:
        return _read_settings(Path(path))
    return _cached_settings()


def reset_settings_cache() -> None:
    _cached_settings.cache_clear()
