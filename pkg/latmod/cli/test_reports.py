import json

import pytest

from latmod.cli.reports import Report, ReportSchemaError, lattice_key, validate_report
from latmod.constructions.families import diamond


def test_report_validates():
    report = Report("check", lattice_key(diamond()))
    with report.timed("check"):
        report.witnesses.append({"property": "modular", "verdict": True})
    data = json.loads(report.dumps())
    assert data["suite"] == "check"
    assert data["timings"]["check"] >= 0
    assert "summary" not in data


def test_schema_rejects_bad_reports():
    with pytest.raises(ReportSchemaError):
        validate_report({"suite": "check", "verdict": True, "witnesses": [], "timings": {}})
    with pytest.raises(ReportSchemaError):
        validate_report({"suite": "check", "lattice_key": "XYZ", "verdict": True, "witnesses": [], "timings": {}})
    with pytest.raises(ReportSchemaError):
        validate_report({"suite": "check", "lattice_key": None, "verdict": True, "witnesses": [1], "timings": {}})
