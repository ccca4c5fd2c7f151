"""Acceptance criteria 1-10: one pass/fail line each.

Run under pytest (lines are repeated in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from typing import Callable, List, Tuple

import pytest

from linksgould import algebra, basis, cli, reference, reps, rmatrix, tangle, topo
from linksgould.ring import ZERO, parse, span_q2alpha
from linksgould.tangle import BraidWord, lg_from_braid

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

Outcome = Tuple[bool, str]


def c1_printed_matrices() -> Outcome:
    checks = reference.check_tables()
    bad = [c for c in checks if not c.ok]
    cells = sum(c.cells for c in checks)
    detail = f"{len(checks)} tables, {cells} cells"
    if bad:
        detail += "; " + "; ".join(c.line() for c in bad)
    return not bad, detail


def c2_theta_u_free() -> Outcome:
    th = basis.theta_rep()
    free = basis.u_free_generators(th)
    nine = all(free[g] for g in algebra.NINE)
    rel = algebra.relations_pass(th)
    return nine and rel, f"9 generators u-free: {nine}; relations on Theta: {rel}"


def c3_braiding() -> Outcome:
    rep = rmatrix.braiding_report()
    dim = rmatrix.commutant_dimension()
    bad = [k for k, ok in rep.items() if not ok]
    detail = f"{len(rep) - len(bad)}/{len(rep)} checks pass; commutant dimension {dim}"
    if bad:
        detail += "; failing: " + ", ".join(bad)
    return not bad, detail


def c4_kt_conway() -> Outcome:
    ref = cli.reference_kt_conway()
    kt = lg_from_braid(cli.KNOTS["kinoshita-terasaka"].braid, mode="interp").value
    cw = lg_from_braid(cli.KNOTS["conway"].braid, mode="interp").value
    coeff = kt.u_coefficients().get(-12, ZERO)
    want = parse("-q^{-8}-q^{-6}+2q^{-4}+q^{-2}-1", "qqa")
    ok = kt == ref and cw == kt and coeff == want
    g = (topo.genus_lower_bound(kt), topo.genus_lower_bound(cw))
    ok = ok and g == (2, 2)
    return ok, f"KT = published: {kt == ref}; Conway = KT: {cw == kt}; q^(-6a) coefficient: {coeff == want}; genus bounds {g}"


def c5_specializations() -> Outcome:
    names = ("unknot", "trefoil", "figure-eight", "kinoshita-terasaka")
    res = {}
    for n in names:
        b = cli.KNOTS[n].braid
        res[n] = topo.specializations_pass(lg_from_braid(b).value, topo.alexander_from_braid(b.word, b.strands))
    return all(res.values()), ", ".join(f"{n}: {'pass' if ok else 'fail'}" for n, ok in res.items())


def c6_alternating() -> Outcome:
    spans = {n: span_q2alpha(lg_from_braid(cli.KNOTS[n].braid).value) for n in ("trefoil", "figure-eight")}
    return all(s == 4 for s in spans.values()), ", ".join(f"{n}: span {s} = 4 x 1" for n, s in spans.items())


def c7_pipeline() -> Outcome:
    parts, ok = [], True
    for n in ("trefoil", "figure-eight"):
        e = cli.KNOTS[n]
        r = tangle.surface_pipeline(e.tangle, e.braid)
        good = r.G.u_free() and r.lg.value == lg_from_braid(e.braid).value and r.dz <= 8 and r.dt <= 0
        ok = ok and good
        parts.append(f"{n}: G u-free {r.G.u_free()}, dz {r.dz}, dt {r.dt}")
    return ok, "; ".join(parts)


def c8_weight_graphs() -> Outcome:
    wc = basis.weight_coherence()
    return all(wc.values()), ", ".join(f"{k}: {v}" for k, v in wc.items())


def c9_span_bounds() -> Outcome:
    r = tangle.admissible_eval(tangle.boundary_link_example())
    c = tangle.LGValue(lg_from_braid(tangle.cable(cli.KNOTS["trefoil"].braid, 2)).value)
    ok = r.span is not None and r.span <= r.bound and c.span is not None and c.span <= 8
    return ok, f"boundary link span {r.span} <= 2l = {r.bound}; cable(trefoil, 2) span {c.span} <= 8"


def c10_split_vanishing() -> Outcome:
    unlink = lg_from_braid(BraidWord(2, ())).value
    qd = reps.quantum_dimension()
    return unlink.is_zero() and qd.is_zero(), f"LG(unlink) = {unlink}, trace pi(K) = {qd}"


CRITERIA: List[Tuple[int, str, Callable[[], Outcome], float]] = [
    (1, "printed-matrix regression", c1_printed_matrices, 10),
    (2, "Theta is u-free and satisfies the relations", c2_theta_u_free, 10),
    (3, "braiding", c3_braiding, 60),
    (4, "KT/Conway reproduction", c4_kt_conway, 600),
    (5, "specialization identities", c5_specializations, 60),
    (6, "alternating equality", c6_alternating, 60),
    (7, "surface pipeline", c7_pipeline, 300),
    (8, "weight-graph coherence", c8_weight_graphs, 1),
    (9, "boundary-link and cable bounds", c9_span_bounds, 600),
    (10, "split-link vanishing", c10_split_vanishing, 1),
]


def evaluate(num: int) -> Tuple[bool, str]:
    _, title, fn, limit = CRITERIA[num - 1]
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    within = dt < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {num:2d} {status}: {title} ({dt:.1f}s, limit {limit:g}s) - {detail}"
    return ok and within, line


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num):
    ok, line = evaluate(num)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
