"""Rewrite the golden files under tests/golden from a fresh computation.

Run after an intentional change of output format; review the diff before committing.
"""
from __future__ import annotations

import argparse
import io
import json
from dataclasses import dataclass
from pathlib import Path

from ydnichols.cli import RunConfig, run
from ydnichols.hopfcore import build_bicrossed_product, preset
from ydnichols.sweep import run_sweep

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class GoldenConfig:
    out_dir: Path = ROOT / "tests" / "golden"
    n_max: int = 8


def sweep_summary(n_max: int) -> dict:
    h = build_bicrossed_product(preset("Hc_sigma0"))
    rows = {}
    for r in run_sweep(h, n_max):
        row = r.row()
        rows[row["label"]] = {
            k: row[k] for k in ("dim", "q", "rpm", "exponent", "graded_dims", "total", "table_member")
        }
    return {"algebra": "Hc_sigma0", "n_max": n_max, "rows": rows}


def dump_summary(doc: dict) -> str:
    """One catalog row per line, so diffs stay readable."""
    rows = doc["rows"]
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(rows[k], sort_keys=True)}" for k in rows)
    return f'{{"algebra": "{doc["algebra"]}", "n_max": {doc["n_max"]}, "rows": {{\n{body}\n}}}}\n'


def cli_output(config: RunConfig) -> str:
    buf = io.StringIO()
    run(config, stdout=buf)
    return buf.getvalue()


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=GoldenConfig.out_dir)
    p.add_argument("--nmax", type=int, default=GoldenConfig.n_max)
    args = p.parse_args()
    cfg = GoldenConfig(args.out_dir, args.nmax)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    (cfg.out_dir / "sweep_summary.json").write_text(dump_summary(sweep_summary(cfg.n_max)))
    files = {
        "nichols_W_x_1_plus_plus.json": RunConfig("nichols", module="W_x_1_plus_plus", fmt="json"),
        "nichols_W_x_1_plus_plus.csv": RunConfig("nichols", module="W_x_1_plus_plus", fmt="csv"),
        "modules_list.csv": RunConfig("modules-list", fmt="csv"),
    }
    for name, config in files.items():
        (cfg.out_dir / name).write_text(cli_output(config))
    print(f"wrote {len(files) + 1} files to {cfg.out_dir}")


if __name__ == "__main__":
    main()
