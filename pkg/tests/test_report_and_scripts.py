from __future__ import annotations

import csv
import importlib.util
import json
import sys
from pathlib import Path

from ydnichols.report import Report

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load_script(name: str):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod  # dataclasses look their module up here
    spec.loader.exec_module(mod)
    return mod


def test_report_semantics():
    rep = Report("demo")
    rep.add("holds", True, "ignored witness")
    rep.add("informational", False, "w1", required=False)
    assert rep.passed
    assert rep.get("holds").witness is None
    assert "note informational  [w1]" in str(rep)
    rep.add("breaks", False, "w2")
    assert not rep.passed
    assert [c.name for c in rep.failures()] == ["breaks"]
    outer = Report("outer")
    outer.extend(rep, "inner: ")
    assert outer.get("inner: breaks").witness == "w2"
    assert json.loads(json.dumps(outer.to_json()))["passed"] is False


def test_run_sweep_script(tmp_path):
    mod = load_script("run_sweep")
    mod.main(mod.SweepConfig(out_dir=tmp_path, n_max=8, family="S2"))
    doc = json.loads((tmp_path / "summary.json").read_text())
    assert len(doc["rows"]) == 8
    with open(tmp_path / "graded" / "X_x2_1_minus.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows == [["n", "rank", "cumulative"], ["1", "2", "3"], ["2", "1", "4"], ["3", "0", "4"]]


def test_sibling_doubles_script(capsys):
    mod = load_script("sibling_doubles")
    mod.main(mod.SiblingConfig(algebras=["Hb1"], samples=200))
    out = capsys.readouterr().out
    assert "Hb1" in out and " ok " in out and " 88 " in out
