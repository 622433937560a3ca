"""Command-line interface: formats, exit codes, output files."""

import json

from stablelimit import cgdata
from stablelimit.cli import main


def test_list_prints_all_ids(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for sid in cgdata.SCENARIO_IDS:
        assert sid in out


def test_single_scenario_json(capsys):
    assert main(["run", "--scenario", "diophantine", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["prime"] == 7
    assert doc["summary"] == {"passed": 1, "failed": 0, "flagged": 0}
    record = doc["scenarios"][0]
    assert record["id"] == "diophantine"
    assert record["status"] == "pass"
    assert record["computed"]["solutions up to bound 100"] == [[2, 2, 3]]
    assert set(record) == {"id", "status", "citation", "computed",
                           "expected", "provenance", "flags", "notes",
                           "millis"}


def test_full_run_reports_the_single_failure(capsys):
    # the lattice scenario carries the one published value the exact
    # computation contradicts, so a full run exits 1
    assert main(["run", "--format", "json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["scenarios"]) == len(cgdata.SCENARIO_IDS)
    assert doc["summary"]["passed"] == len(cgdata.SCENARIO_IDS) - 1
    assert doc["summary"]["failed"] == 1
    failing = [s["id"] for s in doc["scenarios"] if s["status"] != "pass"]
    assert failing == ["lattice"]


def test_text_summary_line(capsys):
    assert main(["run", "--scenario", "expansion", "--scenario", "branch"]) == 0
    out = capsys.readouterr().out
    assert "2/2 passed" in out


def test_unknown_id_is_rejected_before_work(capsys):
    assert main(["run", "--scenario", "no-such-id"]) == 2
    err = capsys.readouterr().err
    assert "no-such-id" in err


def test_bad_jobs_rejected(capsys):
    assert main(["run", "--jobs", "0"]) == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["run", "--scenario", "gamma", "--format", "json",
                 "--out", str(target)])
    assert code == 0
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["scenarios"][0]["id"] == "gamma"
    assert capsys.readouterr().out == ""


def test_out_file_failure_is_io_error(tmp_path):
    bad = tmp_path / "missing-dir" / "report.json"
    assert main(["run", "--scenario", "gamma", "--out", str(bad)]) == 2


def test_parallel_run_matches_serial(capsys):
    ids = ["expansion", "delta", "diophantine", "gamma"]
    args = []
    for sid in ids:
        args += ["--scenario", sid]
    assert main(["run", *args, "--format", "json"]) == 0
    serial = json.loads(capsys.readouterr().out)
    assert main(["run", *args, "--format", "json", "--jobs", "4"]) == 0
    parallel = json.loads(capsys.readouterr().out)
    for doc in (serial, parallel):
        for record in doc["scenarios"]:
            record["millis"] = 0
    assert serial == parallel
