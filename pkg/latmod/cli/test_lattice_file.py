import json
from pathlib import Path

import pytest

from latmod.cli.lattice_file import (
    dump_lattice,
    lattice_to_dict,
    parse_lattice_file,
    read_lattice_file,
    write_lattice_file,
)
from latmod.constructions.families import figure1, partition_lattice
from latmod.core.canonical import is_isomorphic
from latmod.errors import LatticeFileSyntaxError, LatticeValidationError, NotALattice
from latmod.properties.checks import is_graded

SAMPLES = Path(__file__).parent / "samples"


def test_three_chain():
    L = parse_lattice_file('{"size":3,"covers":[[0,1],[1,2]]}')
    assert L.size == 3 and L.height.tolist() == [0, 1, 2]


def test_figure1_text():
    L = parse_lattice_file('{"size":7,"covers":[[0,1],[1,2],[2,3],[3,4],[0,5],[5,6],[6,4]]}')
    assert is_isomorphic(L, figure1())
    assert not is_graded(L)


def test_two_points_have_no_top():
    with pytest.raises(LatticeValidationError) as excinfo:
        parse_lattice_file('{"size":2,"covers":[]}')
    assert isinstance(excinfo.value.__cause__, NotALattice)


def test_bad_json_names_the_line():
    with pytest.raises(LatticeFileSyntaxError) as excinfo:
        parse_lattice_file('{\n  "size": 3,\n  "covers": [[0,1],\n}')
    assert excinfo.value.line == 4


def test_bad_shape_names_the_field():
    with pytest.raises(LatticeFileSyntaxError) as excinfo:
        parse_lattice_file('{"size":3,"covers":[[0,1,2]]}')
    assert excinfo.value.field == "covers/0"
    with pytest.raises(LatticeFileSyntaxError):
        parse_lattice_file('{"size":3,"covers":[],"colour":"red"}')
    with pytest.raises(LatticeFileSyntaxError):
        parse_lattice_file('[1, 2]')


def test_round_trip_is_exact(tmp_path):
    L = partition_lattice(4)
    path = write_lattice_file(L, tmp_path / "p4.json", metadata={"freetext_desc": "partitions of 4"})
    again = read_lattice_file(path)
    assert again == L
    assert again.labels == L.labels
    assert dump_lattice(again) == dump_lattice(L)
    assert json.loads(path.read_text(encoding="utf-8"))["metadata"]["freetext_desc"] == "partitions of 4"


def test_samples_load():
    assert read_lattice_file(SAMPLES / "figure1.json").size == 7
    assert read_lattice_file(SAMPLES / "n5.json").labels[1] == "a"


def test_missing_file(tmp_path):
    with pytest.raises(LatticeFileSyntaxError):
        read_lattice_file(tmp_path / "absent.json")


def test_to_dict_omits_empty_fields():
    data = lattice_to_dict(parse_lattice_file('{"size":1,"covers":[]}'))
    assert data == {"size": 1, "covers": []}
