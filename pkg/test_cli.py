# ----------------------------------------------------------------------------
#  File:        test_cli.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Tests for the command-line interface, settings and command logs
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import json
import os
import sys

import pytest
from jsonschema import Draft202012Validator

# Add the repository root to the path so we can import the seqblocks package
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from seqblocks.main import main, run
from seqblocks.errors import PayloadSchemaError
from seqblocks.runtime import SCHEMA_NAMES, CommandLogger, Settings, load_schema, validate_document


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv("SEQBLOCKS_DEPTH", raising=False)
    monkeypatch.delenv("SEQBLOCKS_LOG_DIR", raising=False)


def test_classify_exact():
    result = run(["classify", "1/n"])
    assert result.exit_code == 0
    assert result.payload["block"] == "G"
    assert result.payload["profile"] == ["0", "0"]
    assert result.payload["method"] == "exact"


def test_classify_oscillating():
    result = run(["classify", "piecewise(mod 2; 1, -n)"])
    assert result.payload["block"] == "A"
    assert result.payload["profile"] == ["-inf", "1"]


def test_classify_numeric():
    result = run(["classify", "sinq(n)", "--numeric"])
    assert result.payload["block"] == "B"
    assert result.payload["method"] == "numeric"


def test_malformed_expression_reports_offset():
    result = run(["classify", "n^x"])
    assert result.exit_code == 1
    assert result.status == "error"
    assert isinstance(result.payload["offset"], int)
    assert "error" in result.payload


def test_unknown_block_letter():
    result = run(["representative", "H"])
    assert result.exit_code == 1


def test_representative_with_shift():
    result = run(["representative", "E", "--shift", "1/2"])
    assert result.payload["block"] == "E"
    assert result.payload["profile"] == ["-inf", "-inf"]

    assert run(["representative", "B", "--shift", "2"]).exit_code == 1


def test_connect_connector_and_obstruction():
    result = run(["connect", "-n", "--target", "F"])
    assert result.exit_code == 0
    assert result.payload["pattern"] == "NegateEF"

    result = run(["connect", "sinq(n)", "--target", "E"])
    assert result.status == "obstruction"
    assert result.exit_code == 0
    assert result.payload["reason"] == "InfinitelyManyZeros"


def test_transfer():
    result = run(["transfer", "n", "--from", "F", "--to", "A"])
    assert result.exit_code == 0
    assert result.payload["target"] == "A"
    assert result.payload["recovered_code"] == result.payload["code"]["value"]

    mismatch = run(["transfer", "n", "--from", "A", "--to", "B"])
    assert mismatch.exit_code == 1


def test_code_uses_environment_depth(monkeypatch):
    monkeypatch.setenv("SEQBLOCKS_DEPTH", "4")
    result = run(["code", "1/2"])
    assert result.payload["depth"] == 4
    assert result.payload["coder"] == "interleaved"

    result = run(["code", "1/2", "--depth", "2", "--coder", "weighted"])
    assert result.payload["depth"] == 2
    assert result.payload["coder"] == "weighted"


def test_subspace():
    result = run(["subspace", "--union", "A,C,G"])
    assert result.payload["is_subspace"] is False
    assert result.payload["witness"]["result_block"] not in ("A", "C", "G")

    result = run(["subspace", "--union", "G,B"])
    assert result.payload["is_subspace"] is True
    assert result.payload["union"] == "B,G"


def test_matrix_csv():
    result = run(["matrix", "--level", "micro", "--format", "csv"])
    assert result.text
    assert result.render().splitlines()[0] == ",A,B,C,D,E,F,G"
    assert result.render().splitlines()[7] == "G,0,0,0,0,0,0,0"


def test_matrix_json():
    result = run(["matrix", "--level", "macro"])
    assert result.payload["ones"] == 42
    assert result.payload["level"] == "macro"


def test_metrics():
    payload = run(["metrics"]).payload
    assert payload["coverage"] == "2/3"
    assert payload["consistency"] == "1"
    assert payload["jaccard"] == "2/3"
    assert payload["hamming"] == "35/49"
    assert payload["banach_share"] == "2/7"
    assert payload["v_subgraph_of_u"]
    assert payload["matches_reference"]


def test_graph():
    source = run(["graph", "--level", "macro"]).render()
    assert len([line for line in source.splitlines() if " -> " in line]) == 42


def test_regions():
    payload = run(["regions"]).payload
    assert [region["block"] for region in payload["regions"]] == list("ABCDEFG")
    assert payload["banach_share"] == "2/7"


def test_main_prints_json(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["classify", "n"])
    assert exit_info.value.code == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed["status"] == "ok"
    assert printed["block"] == "F"


def test_main_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["classify", "n + $"])
    assert exit_info.value.code == 1
    assert json.loads(capsys.readouterr().out)["offset"] == 4


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exit_info:
        main(["frobnicate"])
    assert exit_info.value.code == 2


# -- settings and command logs -----------------------------------------------

def test_settings_defaults():
    settings = Settings()
    assert settings["coder"]["depth"] == 8
    assert settings.get("certification")["extra_members"] == 3


def test_settings_fall_back_when_missing(tmp_path):
    settings = Settings(tmp_path / "missing.yaml")
    assert settings["estimator"]["horizon"] == 10000
    assert settings["coder"]["coder"] == "interleaved"


def test_settings_fall_back_when_malformed(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("coder: [unclosed\n", encoding="utf-8")
    assert Settings(path)["coder"]["digits"] == 16


def test_settings_partial_override(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("coder:\n  depth: 5\n", encoding="utf-8")
    settings = Settings(path)
    assert settings["coder"]["depth"] == 5
    assert settings["coder"]["digits"] == 16


def test_config_option_reaches_commands(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("coder:\n  coder: weighted\n  depth: 3\n", encoding="utf-8")
    payload = run(["code", "n", "--config", str(path)]).payload
    assert payload["coder"] == "weighted"
    assert payload["depth"] == 3


def test_command_records(tmp_path, monkeypatch):
    monkeypatch.setenv("SEQBLOCKS_LOG_DIR", str(tmp_path))
    run(["regions"])
    records = list((tmp_path / "commands").glob("*_regions.json"))
    assert len(records) == 1
    record = json.loads(records[0].read_text(encoding="utf-8"))
    assert record["command"] == "regions"
    assert record["status"] == "ok"
    assert record["argv"] == ["regions"]


def test_command_logger_disabled_without_directory():
    assert CommandLogger(None).log_command("regions", [], "ok", {}) is None


# -- published schemas -------------------------------------------------------

JSON_COMMANDS = [
    (["classify", "1/n"], "classify"),
    (["classify", "sinq(n)", "--numeric"], "classify"),
    (["representative", "D", "--shift", "1/3"], "representative"),
    (["connect", "n", "--target", "A"], "connect"),
    (["connect", "-n", "--target", "F"], "connect"),
    (["connect", "piecewise(mod 2; 0, 1)", "--target", "F"], "connect"),
    (["connect", "0", "--target", "B"], "connect"),
    (["transfer", "sinq(n)", "--from", "B", "--to", "D", "--coder", "weighted"], "transfer"),
    (["code", "n*sinq(n)"], "code"),
    (["subspace", "--union", "A,C,G"], "subspace"),
    (["subspace", "--union", "D,E"], "subspace"),
    (["subspace", "--union", "B,G"], "subspace"),
    (["matrix", "--level", "macro"], "matrix"),
    (["matrix", "--level", "micro"], "matrix"),
    (["metrics"], "metrics"),
    (["regions"], "regions"),
    (["classify", "n^x"], "error"),
    (["transfer", "n", "--from", "A", "--to", "B"], "error"),
]


@pytest.mark.parametrize("name", SCHEMA_NAMES)
def test_published_schemas_are_valid(name):
    Draft202012Validator.check_schema(load_schema(name))


@pytest.mark.parametrize("argv,name", JSON_COMMANDS)
def test_output_matches_published_schema(argv, name):
    document = json.loads(run(argv).render())
    Draft202012Validator(load_schema(name)).validate(document)


def test_schema_violation_is_reported():
    with pytest.raises(PayloadSchemaError):
        validate_document("classify", {"status": "ok", "block": "H"})
    with pytest.raises(PayloadSchemaError):
        validate_document("metrics", {"status": "error"})
    validate_document("classify", {"status": "error", "error": "offset 2: bad"})


# -- deterministic output ----------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["matrix", "--level", "micro"],
    ["matrix", "--level", "micro", "--format", "csv"],
    ["metrics"],
    ["graph", "--level", "micro"],
    ["subspace", "--union", "A,C,G"],
    ["connect", "piecewise(mod 3; n, 0, -n)", "--target", "E"],
])
def test_identical_arguments_print_identical_bytes(argv, capsys):
    outputs = []
    for _ in range(2):
        with pytest.raises(SystemExit):
            main(argv)
        outputs.append(capsys.readouterr().out.encode("utf-8"))
    assert outputs[0] == outputs[1]
    assert outputs[0]
