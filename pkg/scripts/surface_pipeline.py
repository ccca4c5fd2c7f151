"""Run the genus-one surface pipeline over a grid of band twists and report the degree audit."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from linksgould import tangle


@dataclass
class Config:
    max_twist: int = 2
    clasp: str = "X+"


def run(cfg: Config):
    rng = [t for t in range(-cfg.max_twist, cfg.max_twist + 1) if t]
    for a in rng:
        for b in rng:
            r = tangle.surface_pipeline(tangle.genus_one(a, b, cfg.clasp))
            yield a, b, len(r.G.coeffs), r.lg.span, r.dz, r.dt


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-twist", type=int, default=Config.max_twist)
    ap.add_argument("--clasp", choices=("X+", "X-"), default=Config.clasp)
    a = ap.parse_args()
    print(f"{'a':>3}{'b':>3}{'|G|':>7}{'span':>6}{'dz':>5}{'dt':>5}")
    for row in run(Config(a.max_twist, a.clasp)):
        a_, b_, n, span, dz, dt = row
        print(f"{a_:>3}{b_:>3}{n:>7}{str(span):>6}{str(dz):>5}{str(dt):>5}")
