"""Span bounds for an admissible boundary-link diagram and for (n, 0)-cables."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from linksgould import cli, tangle
from linksgould.tangle import lg_from_braid


@dataclass
class Config:
    cable_knots: tuple = ("trefoil", "figure-eight")
    n: int = 2


def run(cfg: Config):
    d = tangle.boundary_link_example()
    r = tangle.admissible_eval(d)
    print(f"boundary link: k={d.k} l={d.l} m={d.m} genus={d.surface.genus()} span={r.span} bound 2l={r.bound}")
    for name in cfg.cable_knots:
        e = cli.KNOTS[name]
        c = tangle.cable(e.braid, cfg.n)
        v = tangle.LGValue(lg_from_braid(c).value)
        print(f"cable({name}, {cfg.n}): {c.strands} strands, {len(c.word)} crossings, span={v.span}, "
              f"bound 4 n g = {4 * cfg.n * e.genus}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knots", nargs="+", default=list(Config.cable_knots), choices=tuple(cli.KNOTS))
    ap.add_argument("-n", type=int, default=Config.n)
    a = ap.parse_args()
    run(Config(tuple(a.knots), a.n))
