"""Compare the LG genus bound with the Alexander bound on bundled knots and (2, 2k+1) torus knots."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from linksgould import cli, topo
from linksgould.tangle import BraidWord, lg_from_braid


@dataclass
class Config:
    max_torus: int = 4  # T(2, 2k+1) for k = 1..max_torus
    skip: tuple = ()


def rows(cfg: Config):
    knots = [(n, e.braid, e.genus) for n, e in cli.KNOTS.items() if n not in cfg.skip]
    knots += [(f"T(2,{2 * k + 1})", BraidWord(2, (1,) * (2 * k + 1)), k) for k in range(2, cfg.max_torus + 1)]
    for name, b, genus in knots:
        lg = lg_from_braid(b).value
        alex = topo.alexander_from_braid(b.word, b.strands)
        yield name, topo.alexander_genus_bound(alex), topo.genus_lower_bound(lg), genus


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-torus", type=int, default=Config.max_torus)
    ap.add_argument("--skip", nargs="*", default=[])
    a = ap.parse_args()
    print(f"{'knot':<20}{'Alexander':>10}{'LG':>6}{'genus':>7}")
    for name, ab, lb, g in rows(Config(a.max_torus, tuple(a.skip))):
        print(f"{name:<20}{ab:>10}{lb:>6}{g if g is not None else '?':>7}")
