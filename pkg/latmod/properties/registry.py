"""Properties addressable by name from the CLI and catalog filters."""

from typing import Callable, Dict, List

from latmod.core.lattice import Lattice
from latmod.properties.checks import has_left_modular_chain, is_distributive, is_graded, is_modular
from latmod.properties.report import PropertyReport
from latmod.properties.supersolvable import is_supersolvable

PropertyCheck = Callable[[Lattice], PropertyReport]

PROPERTIES: Dict[str, PropertyCheck] = {
    "graded": is_graded,
    "distributive": is_distributive,
    "modular": is_modular,
    "left-modular": has_left_modular_chain,
    "supersolvable": is_supersolvable,
}


def property_names() -> List[str]:
    return sorted(PROPERTIES)


def check_properties(L: Lattice, names=None) -> List[PropertyReport]:
    """Run the named checks (all of them by default) in registry order."""
    names = list(PROPERTIES) if not names else names
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties: {', '.join(unknown)} (known: {', '.join(property_names())})")
    return [PROPERTIES[n](L) for n in names]
