from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ydnichols.cli import RunConfig, UsageError, main, run
from ydnichols.hopfcore import preset

GOLDEN = Path(__file__).parent / "golden"


def capture(config: RunConfig) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(config, stdout=buf)
    return code, buf.getvalue()


def test_hopf_verify_preset():
    code, out = capture(RunConfig("hopf-verify", algebra="Hb1"))
    assert code == 0
    assert "antipode" in out


@pytest.mark.parametrize(
    "config",
    [
        RunConfig("hopf-verify", algebra="nope"),
        RunConfig("frobnicate"),
        RunConfig("nichols"),
        RunConfig("nichols", module="W_x_9_plus_plus"),
        RunConfig("nichols", module="W_x_1_plus_plus", n_max=0),
        RunConfig("braidings", algebra="Hb1"),
        RunConfig("modules-list", fmt="yaml"),
    ],
)
def test_usage_errors_exit_2(config):
    assert capture(config)[0] == 2


def test_validate_raises_before_computing():
    with pytest.raises(UsageError):
        RunConfig("sweep", algebra="Ha1").validate()


def test_failed_check_exits_1(tmp_path):
    obj = preset("Hc_sigma0").to_json()
    obj["sigma"]["t,t"]["x"] = {"re": [-1, 1], "im": [0, 1]}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(obj))
    code, out = capture(RunConfig("hopf-verify", algebra=str(path), fmt="json"))
    assert code == 1
    doc = json.loads(out)
    failed = [c for c in doc["report"]["checks"] if not c["passed"]]
    assert failed and failed[0]["witness"]


def test_resource_limit_exits_2(monkeypatch):
    monkeypatch.setenv("NICHOLS_MAX_MATRIX", "8")
    assert capture(RunConfig("nichols", module="W_x_1_plus_plus"))[0] == 2


def test_nichols_module_json_matches_golden():
    code, out = capture(RunConfig("nichols", module="W_x_1_plus_plus", fmt="json"))
    assert code == 0
    assert out == (GOLDEN / "nichols_W_x_1_plus_plus.json").read_text()
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["graded"]["total"] == 16


def test_nichols_module_csv_matches_golden():
    code, out = capture(RunConfig("nichols", module="W_x_1_plus_plus", fmt="csv"))
    assert out == (GOLDEN / "nichols_W_x_1_plus_plus.csv").read_text()
    assert out.splitlines()[0] == "n,rank,cumulative"


def test_modules_list_matches_golden():
    code, out = capture(RunConfig("modules-list", fmt="csv"))
    assert code == 0
    assert out == (GOLDEN / "modules_list.csv").read_text()
    assert len(out.splitlines()) == 89


def test_output_is_deterministic():
    a = capture(RunConfig("braidings", fmt="json"))[1]
    b = capture(RunConfig("braidings", fmt="json"))[1]
    assert a == b


def test_out_directory(tmp_path):
    code, _ = capture(RunConfig("double-verify", fmt="json", out=str(tmp_path), samples=300))
    assert code == 0
    doc = json.loads((tmp_path / "double-verify.json").read_text())
    assert doc["report"]["passed"]


def test_two_word_commands(capsys):
    assert main(["modules", "list"]) == 0
    assert "W^+_{x,1,+}" in capsys.readouterr().out
    assert main(["double", "verify", "--samples", "200"]) == 0


def test_modules_verify_reports_every_entry():
    code, out = capture(RunConfig("modules-verify", fmt="json"))
    assert code == 0
    assert len(json.loads(out)["modules"]) == 88


@pytest.mark.slow
def test_sweep_command_end_to_end():
    code, out = capture(RunConfig("sweep", n_max=8, fmt="json", samples=1000))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 88 and doc["checks"]["passed"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ydnichols.cli", "hopf-verify", "--algebra", "nope"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "unknown algebra" in proc.stderr
