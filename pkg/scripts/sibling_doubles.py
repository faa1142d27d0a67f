"""Build D(H) for all seven abelian extensions and compare a few invariants.

For each algebra: Hopf axioms, S^2 = id, D(H) structure checks, and the
dimension of the center of D(H), which counts its simple modules.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from ydnichols.double import double_verify
from ydnichols.exactlinalg import ONE, Matrix, mat_rank
from ydnichols.hopfcore import PRESETS, build_bicrossed_product, preset


@dataclass
class SiblingConfig:
    algebras: list = field(default_factory=lambda: list(PRESETS))
    samples: int = 2000


def center_dimension(d) -> int:
    n = d.dim
    re_blocks, im_blocks = [], []
    for g in d.generators.values():
        re = np.zeros((n, n), dtype=np.int64)
        im = np.zeros((n, n), dtype=np.int64)
        for p in range(n):
            for k, c in d.product({p: ONE}, g).items():
                re[k, p] += c.re
                im[k, p] += c.im
            for k, c in d.product(g, {p: ONE}).items():
                re[k, p] -= c.re
                im[k, p] -= c.im
        re_blocks.append(re)
        im_blocks.append(im)
    return n - mat_rank(Matrix.from_parts(np.vstack(re_blocks), np.vstack(im_blocks)))


def main(cfg: SiblingConfig) -> None:
    print(f"{'algebra':10s} {'checks':>7s} {'S^2=id':>7s} {'dim Z(D)':>9s} {'seconds':>8s}")
    for name in cfg.algebras:
        t0 = time.perf_counter()
        h = build_bicrossed_product(preset(name))
        d, rep = double_verify(h, samples=cfg.samples)
        involutive = rep.get("H: S^2 = id").passed
        z = center_dimension(d)
        status = "ok" if rep.passed else "FAIL"
        print(f"{name:10s} {status:>7s} {str(involutive):>7s} {z:>9d} {time.perf_counter() - t0:>8.1f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("algebras", nargs="*", default=list(PRESETS))
    p.add_argument("--samples", type=int, default=2000)
    a = p.parse_args()
    main(SiblingConfig(a.algebras, a.samples))
