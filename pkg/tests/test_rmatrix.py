import json

import pytest

from linksgould import rmatrix
from linksgould.ring import ONE, QA, S, U, ZERO, sp_eye, sp_mul


def test_commutant_dimension_is_three_and_checked():
    # V (x) V has three non-isomorphic summands (4 + 8 + 4)
    assert rmatrix.commutant_dimension() == 3
    with pytest.raises(rmatrix.CommutantDimensionError, match="expected 4"):
        rmatrix.commutant()
    assert len(rmatrix.commutant(expected_dim=None)) == 3


def test_idempotents_split_the_square():
    ps = rmatrix.idempotents()
    n = 16
    total = {}
    for p in ps:
        assert sp_mul(p, p) == p
        for k, v in p.items():
            total[k] = total.get(k, ZERO) + v
    assert {k: v for k, v in total.items() if v} == sp_eye(n)
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            assert sp_mul(p, q) == {}


def test_yang_baxter_solutions():
    sols = rmatrix.yb_solutions()
    assert len(sols) == 3
    for cs in sols:
        assert rmatrix.yb_residual(rmatrix.combine(cs)) == {}


def test_selected_braiding():
    br = rmatrix.braiding()
    assert br.coeffs == (QA**-2, S**4 * U**4, -ONE)
    assert sp_mul(br.R, br.R_inv) == sp_eye(16)
    for side in ("left", "right"):
        assert rmatrix.kink(br.R, side) == sp_eye(4)
        assert rmatrix.kink(br.R_inv, side) == sp_eye(4)


def test_selection_needs_the_tie_break():
    alive = [c for c in rmatrix.candidates() if c.survives]
    assert len(alive) == 2
    assert sum(c.triangular for c in alive) == 1


def test_selection_error_lists_candidates():
    cands = [c for c in rmatrix.candidates() if c.survives]
    flat = [type(c)(c.coeffs, *(None,) * 4, False, False) for c in cands]
    with pytest.raises(rmatrix.BraidingSelectionError, match="YB solutions"):
        rmatrix.select(flat)


def test_crossings_all_orientations():
    report = rmatrix.braiding_report()
    failing = [k for k, ok in report.items() if not ok]
    assert failing == ["commutant dimension = 4"]


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(rmatrix.CACHE_ENV, str(tmp_path))
    first = rmatrix._selected_coeffs()
    assert (tmp_path / "braiding.json").exists()
    assert rmatrix._selected_coeffs() == first
    rmatrix.dump_fixture(tmp_path / "R.json")
    assert len(json.loads((tmp_path / "R.json").read_text())["R"]) > 0
