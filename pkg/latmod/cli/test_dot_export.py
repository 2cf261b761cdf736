import pytest

from latmod.cli.dot_export import export_dot, write_dot
from latmod.constructions.families import chain, pentagon
from latmod.constructions.grid import grid_quotient


def _count(text, needle):
    return sum(1 for line in text.splitlines() if needle in line)


def test_three_chain():
    text = export_dot(chain(2))
    assert _count(text, "[label=") == 3
    assert _count(text, "->") == 2
    assert text.startswith('digraph "chain(2)" {')


def test_grid_one_is_rank_aligned():
    L, _ = grid_quotient(1)
    text = export_dot(L)
    assert _count(text, "[label=") == 8
    assert _count(text, "rank = same") == 5


def test_deterministic(tmp_path):
    L = pentagon()
    assert export_dot(L) == export_dot(L)
    first = write_dot(L, tmp_path / "a.gv").read_bytes()
    second = write_dot(L, tmp_path / "b.gv").read_bytes()
    assert first == second


def test_custom_labels():
    text = export_dot(chain(1), labels=["bottom", 'say "top"'])
    assert '[label="bottom"]' in text
    assert '[label="say \\"top\\""]' in text
    with pytest.raises(ValueError):
        export_dot(chain(1), labels=["only one"])
