"""Reproduce the shared LG of the Kinoshita-Terasaka and Conway knots and time both modes."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from linksgould import cli, topo
from linksgould.tangle import lg_from_braid


@dataclass
class Config:
    modes: tuple = ("exact", "interp")
    style: str = "qqa"


def run(cfg: Config) -> dict:
    ref = cli.reference_kt_conway()
    rows = []
    for name in cli.GATED:
        b = cli.KNOTS[name].braid
        alex = topo.alexander_from_braid(b.word, b.strands)
        for mode in cfg.modes:
            t = time.perf_counter()
            lg = lg_from_braid(b, mode=mode)
            rows.append(
                {
                    "knot": name,
                    "mode": mode,
                    "seconds": round(time.perf_counter() - t, 2),
                    "matches_published": lg.value == ref,
                    "alexander": str(alex),
                    "span": str(lg.span),
                    "genus_lower_bound": topo.genus_lower_bound(lg.value),
                }
            )
    return {"config": asdict(cfg), "published": lg.render(cfg.style), "runs": rows}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--modes", nargs="+", default=list(Config.modes), choices=("exact", "interp"))
    ap.add_argument("--style", default=Config.style, choices=("qqa", "t0t1", "su"))
    a = ap.parse_args()
    print(json.dumps(run(Config(tuple(a.modes), a.style)), indent=1))
