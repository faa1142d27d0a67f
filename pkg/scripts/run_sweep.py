"""Nichols graded dimensions for every simple Yetter-Drinfeld module over H_{c:sigma0}.

Writes summary.txt, summary.json and one graded CSV per entry into the output directory.
"""
from __future__ import annotations

import argparse
import csv
import json
import time
from dataclasses import dataclass
from pathlib import Path

from ydnichols.cli import emit_summary
from ydnichols.hopfcore import build_bicrossed_product, preset
from ydnichols.nichols import DEFAULT_NMAX
from ydnichols.repcat import catalog
from ydnichols.sweep import run_sweep


@dataclass
class SweepConfig:
    out_dir: Path = Path("runs/sweep")
    n_max: int = DEFAULT_NMAX
    family: str | None = None  # S0..S4, or every family


def main(cfg: SweepConfig) -> None:
    h = build_bicrossed_product(preset("Hc_sigma0"))
    reps = [r for r in catalog() if cfg.family in (None, r.family)]
    t0 = time.perf_counter()
    results = run_sweep(h, cfg.n_max, reps)
    elapsed = time.perf_counter() - t0

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    doc = emit_summary(results)
    text = doc.pop("text")
    (cfg.out_dir / "summary.txt").write_text("\n".join(text) + "\n")
    (cfg.out_dir / "summary.json").write_text(json.dumps(doc, indent=2) + "\n")
    graded = cfg.out_dir / "graded"
    graded.mkdir(exist_ok=True)
    for r in results:
        with open(graded / f"{r.label}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(("n", "rank", "cumulative"))
            w.writerows(r.graded.csv_rows())
    print("\n".join(text))
    print(f"\n{len(results)} entries in {elapsed:.1f}s -> {cfg.out_dir}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=SweepConfig.out_dir)
    p.add_argument("--nmax", type=int, default=SweepConfig.n_max)
    p.add_argument("--family", choices=("S0", "S1", "S2", "S3", "S4"))
    a = p.parse_args()
    main(SweepConfig(a.out_dir, a.nmax, a.family))
