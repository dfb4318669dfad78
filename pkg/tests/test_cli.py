"""End to end checks of the command line interface."""

import json
from pathlib import Path

import jsonschema
import pytest

from gmquantum.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs"
     / "certificate.schema.json").read_text())


def run_json(capsys, argv):
    code = main(argv)
    payload = json.loads(capsys.readouterr().out)
    return code, payload


def test_gw_markdown(capsys):
    assert main(["gw"]) == 0
    out = capsys.readouterr().out
    for line in ("I11 = 6", "I12 = 10", "I13 = 6", "I2 = 12",
                 "J11 = 24", "J12 = 12", "J2 = 32"):
        assert line in out
    assert "| claim |" in out


def test_every_command_passes_schema(capsys):
    for command in ("gw", "matrix", "table", "presentation", "deform",
                    "criterion", "verify-all"):
        code, payload = run_json(
            capsys, [command, "--format", "json", "--no-timestamp"])
        assert code == 0, command
        jsonschema.validate(payload, SCHEMA)
        assert payload["command"] == command
        assert payload["failed"] == []
        assert "timestamp" not in payload


def test_timestamp_present_by_default(capsys):
    _, payload = run_json(capsys, ["gw", "--format", "json"])
    assert "timestamp" in payload


def test_verify_all_deterministic(capsys):
    argv = ["verify-all", "--format", "json", "--no-timestamp"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second
    main(argv + ["--jobs", "2"])
    parallel = capsys.readouterr().out
    assert parallel == first


def test_verify_all_counts(capsys):
    _, payload = run_json(
        capsys, ["verify-all", "--format", "json", "--no-timestamp"])
    certs = payload["certificates"]
    assert len(certs) == 42
    by_status = {}
    for c in certs:
        by_status[c["status"]] = by_status.get(c["status"], 0) + 1
    assert by_status == {"verified": 39, "model-axiom": 3}
    claims = [c["claim"] for c in certs]
    assert claims == sorted(claims)
    assert len(set(claims)) == len(claims)


def test_matrix_at_specialization(capsys):
    _, payload = run_json(capsys, ["matrix", "--format", "json",
                                   "--no-timestamp", "--at", "q=1"])
    assert payload["at"] == {"q": "1"}
    rep = payload["at_report"]
    assert rep["roots_verified"] is True
    assert rep["eigenvalue_square_equation"] == "T^2 - 44*T - 16"
    assert rep["eigenvalue_squares"] == ["22 + 10*sqrt(5)",
                                         "22 - 10*sqrt(5)"]
    assert rep["matrix"][0] == ["0", "6", "0", "0", "24", "0"]


def test_deform_at_specialization(capsys):
    _, payload = run_json(capsys, ["deform", "--format", "json",
                                   "--no-timestamp", "--at", "q=2,t=1/3"])
    assert payload["at"] == {"q": "2", "t": "1/3"}
    rep = payload["at_report"]
    assert rep["eigenvalue"] == "-8/3"
    assert rep["matrix"][0][1] == "24"
    assert "t^2" in rep["note"]


def test_criterion_degenerate_specialization(capsys):
    code, payload = run_json(capsys, ["criterion", "--format", "json",
                                      "--no-timestamp", "--at", "q=0"])
    assert code == 0
    rep = payload["at_report"]
    assert rep["satisfied"] is False
    assert rep["profile"] == {"6": 1}
    assert payload["failed"] == []


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectralize"])
    assert exc.value.code == 2


def test_bad_at_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "--at", "q=banana"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "--at", "t=1"])
    assert exc.value.code == 2


def test_gw_rejects_at(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gw", "--at", "q=1"])
    assert exc.value.code == 2


def test_markdown_table_rows(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    assert "s11 * s11" in out or "s11*s11" in out
    assert "32*q^2*s0 + 6*q*s2 + s31" in out
