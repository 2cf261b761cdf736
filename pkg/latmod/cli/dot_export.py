"""
Graphviz DOT emission of Hasse diagrams.

Elements of equal height share a ``rank = same`` block and covers point
upward, so the output can be laid out with::

    dot -Tpng -O lattice.gv
"""

from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from latmod.core.lattice import Lattice


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(L: Lattice, labels: Optional[Sequence[str]] = None) -> str:
    """DOT text for L; identical input gives byte-identical output."""
    if labels is None:
        labels = [L.label(e) for e in L.elements]
    elif len(labels) != L.size:
        raise ValueError(f"{len(labels)} labels given for {L.size} elements")

    levels: Dict[int, List[int]] = {}
    for e in L.elements:
        levels.setdefault(int(L.height[e]), []).append(e)

    lines = [f"digraph {_quote(L.name or 'lattice')} {{", "\trankdir = BT;", "\tnode [shape = circle];"]
    for height in sorted(levels):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for e in levels[height]:
            lines.append(f'\t\t"{e}" [label={_quote(str(labels[e]))}];')
        lines.append("\t}")
    for a, b in L.covers:
        lines.append(f'\t"{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(L: Lattice, path: Union[str, Path], labels: Optional[Sequence[str]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(export_dot(L, labels))
    return path
