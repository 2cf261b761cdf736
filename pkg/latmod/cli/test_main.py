import json
from pathlib import Path

import pytest

from latmod.cli.lattice_file import read_lattice_file, write_lattice_file
from latmod.cli.main import EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, main
from latmod.cli.reports import validate_report
from latmod.constructions.families import boolean, diamond
from latmod.core.canonical import is_isomorphic
from latmod.enumeration.catalog import catalog_load

SAMPLES = Path(__file__).parent / "samples"
FIGURE1 = str(SAMPLES / "figure1.json")
N5 = str(SAMPLES / "n5.json")


def _json(capsys):
    data = json.loads(capsys.readouterr().out)
    validate_report(data)
    return data


def test_check_figure1_not_graded(capsys):
    assert main(["check", FIGURE1, "--property", "graded", "-q"]) == EXIT_FALSE
    assert "graded: no" in capsys.readouterr().out


def test_check_all_json(capsys, tmp_path):
    path = write_lattice_file(diamond(), tmp_path / "m3.json")
    assert main(["check", str(path), "--json", "-q"]) == EXIT_FALSE
    data = _json(capsys)
    assert [w["property"] for w in data["witnesses"]] == [
        "graded", "distributive", "modular", "left-modular", "supersolvable",
    ]
    assert data["verdict"] is False, "M3 is not distributive"
    assert main(["check", str(path), "--property", "graded,modular", "-q"]) == EXIT_OK


def test_unknown_property(capsys):
    assert main(["check", N5, "--property", "shiny", "-q"]) == EXIT_INPUT


def test_graded_quotient_of_pentagon(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["graded-quotient", N5, "-o", str(out), "-q"]) == EXIT_OK
    assert is_isomorphic(read_lattice_file(out), boolean(2))


def test_figure1_has_no_graded_quotient(capsys):
    assert main(["graded-quotient", FIGURE1, "--json", "-q"]) == EXIT_FALSE
    assert _json(capsys)["verdict"] is False


def test_congruences(capsys):
    assert main(["congruences", N5, "--count", "-q"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "5"
    assert main(["congruences", N5, "--list", "--oracle", "--json", "-q"]) == EXIT_OK
    assert len(_json(capsys)["witnesses"]) == 5


def test_construct(tmp_path):
    out = tmp_path / "b3.json"
    assert main(["construct", "boolean", "--n", "3", "-o", str(out), "-q"]) == EXIT_OK
    assert read_lattice_file(out).size == 8
    out = tmp_path / "prod.json"
    assert main(["construct", "product(chain(1),boolean(2))", "-o", str(out), "-q"]) == EXIT_OK
    assert read_lattice_file(out).size == 8


def test_construct_errors(tmp_path):
    assert main(["construct", "shiny", "-q"]) == EXIT_INPUT
    assert main(["construct", "boolean", "-q"]) == EXIT_INPUT
    assert main(["construct", "boolean", "--n", "99", "-q"]) == EXIT_INPUT


def test_bad_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"size":2,"covers":[]}', encoding="utf-8")
    assert main(["check", str(bad), "-q"]) == EXIT_INPUT
    assert main(["export-dot", str(tmp_path / "absent.json"), "-o", str(tmp_path / "x.gv"), "-q"]) == EXIT_INPUT


def test_export_dot(tmp_path):
    out = tmp_path / "n5.gv"
    assert main(["export-dot", N5, "-o", str(out), "-q"]) == EXIT_OK
    assert out.read_text(encoding="utf-8").count("->") == 5


def test_enumerate_and_verify(tmp_path, capsys):
    catalog_dir = tmp_path / "catalog"
    assert main(["enumerate", "--max-size", "6", "--out", str(catalog_dir), "-q"]) == EXIT_OK
    assert len(catalog_load(catalog_dir)) == 25
    capsys.readouterr()
    for suite in ("theorem1", "lemmas", "pq", "birkhoff", "universal"):
        code = main(["verify", suite, "--corpus", str(catalog_dir), "--json", "-q"])
        data = _json(capsys)
        assert code == EXIT_OK, f"{suite}: {data['witnesses']}"
        assert data["suite"] == f"verify:{suite}"


def test_enumerate_filter(tmp_path):
    catalog_dir = tmp_path / "catalog"
    assert main(["enumerate", "--max-size", "7", "--filter", "graded,!supersolvable",
                 "--out", str(catalog_dir), "-q"]) == EXIT_OK
    assert len(catalog_load(catalog_dir)) >= 1


@pytest.mark.timeout(600)
def test_verify_theorem1_up_to_eight(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["verify", "theorem1", "--max-size", "8", "--json", "-q"]) == EXIT_OK
    data = _json(capsys)
    assert data["summary"]["total"] == 300
    assert data["summary"]["violations"] == []


def test_caps():
    assert main(["enumerate", "--max-size", "12", "-q"]) == EXIT_INTERNAL
    assert main(["congruences", N5, "--cap", "2", "-q"]) == EXIT_INTERNAL


def test_verify_needs_a_corpus():
    assert main(["verify", "lemmas", "-q"]) == EXIT_INPUT


def test_every_command_reports_json(tmp_path, capsys):
    assert main(["construct", "grid", "--k", "1", "--json", "-q"]) == EXIT_OK
    assert _json(capsys)["witnesses"][0]["size"] == 8
    assert main(["export-dot", N5, "-o", str(tmp_path / "n5.gv"), "--json", "-q"]) == EXIT_OK
    assert _json(capsys)["summary"]["path"].endswith("n5.gv")
    assert main(["graded-quotient", N5, "--json", "-q"]) == EXIT_OK
    assert _json(capsys)["witnesses"][0]["size"] == 4
    assert main(["enumerate", "--max-size", "4", "--out", str(tmp_path / "c"), "--json", "-q"]) == EXIT_OK
    assert _json(capsys)["summary"]["sizes"] == {"1": 1, "2": 1, "3": 1, "4": 2}


@pytest.mark.timeout(120)
def test_construct_large_boolean(tmp_path, capsys):
    out = tmp_path / "b8.json"
    assert main(["construct", "boolean", "--n", "8", "-o", str(out), "--json", "-q"]) == EXIT_OK
    assert _json(capsys)["witnesses"][0]["size"] == 256
    assert main(["construct", "boolean", "--n", "11", "-q"]) == EXIT_INPUT


def test_lemmas_honour_the_cap(tmp_path):
    catalog_dir = tmp_path / "catalog"
    assert main(["enumerate", "--max-size", "4", "--out", str(catalog_dir), "-q"]) == EXIT_OK
    assert main(["verify", "lemmas", "--corpus", str(catalog_dir), "-q"]) == EXIT_OK
    assert main(["verify", "lemmas", "--corpus", str(catalog_dir), "--cap", "1", "-q"]) == EXIT_INTERNAL
