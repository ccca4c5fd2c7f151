import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linksgould import topo
from linksgould.ring import ONE, QA, ZERO, ULaurent
from linksgould.tangle import BraidWord, lg_from_braid

from strategies import braid_words

TREFOIL = ULaurent({-1: 1, 0: -1, 1: 1})
FIGURE8 = ULaurent({-1: -1, 0: 3, 1: -1})
KT = (4, (-1, -1, -1, -1, 2, 2, 1, -3, 2, 2, -3, 2, -3))
CONWAY = (4, (-1, -1, 2, -1, 2, -1, 3, -2, -2, 3, 3))


@pytest.mark.parametrize(
    "strands,word,want",
    [
        (1, (), ULaurent.const(1)),
        (2, (1, 1, 1), TREFOIL),
        (2, (-1, -1, -1), TREFOIL),
        (3, (1, -2, 1, -2), FIGURE8),
        (*KT, ULaurent.const(1)),
        (*CONWAY, ULaurent.const(1)),
    ],
)
def test_alexander_from_braid(strands, word, want):
    assert topo.alexander_from_braid(word, strands).poly == want


def test_seifert_and_burau_agree():
    assert topo.alexander_from_seifert([[-1, 1], [0, -1]]).poly == TREFOIL
    assert topo.alexander_from_seifert([[1, 1], [0, -1]]).poly == FIGURE8
    assert topo.alexander_from_seifert([]).poly == ULaurent.const(1)


@given(st.integers(1, 4), st.sampled_from([1, -1]))
def test_alexander_stabilization_invariance(k, sign):
    # a Markov stabilization does not change the knot type
    word = (1,) * (2 * k + 1)
    assert topo.alexander_from_braid(word + (sign * 2,), 3).poly == topo.alexander_from_braid(word, 2).poly


@pytest.mark.parametrize(
    "b", [BraidWord(1, ()), BraidWord(2, (1, 1, 1)), BraidWord(3, (1, -2, 1, -2)), BraidWord(2, (1,) * 5)]
)
def test_specializations(b):
    lg = lg_from_braid(b).value
    alex = topo.alexander_from_braid(b.word, b.strands)
    report = topo.check_specializations(lg, alex)
    assert [r["status"] for r in report] == ["pass", "pass"]
    assert topo.alexander_weaker(lg, alex)


def test_specialization_failure_is_reported():
    lg = lg_from_braid(BraidWord(2, (1, 1, 1))).value
    report = topo.check_specializations(lg, topo.AlexPoly(FIGURE8))
    assert {r["status"] for r in report} == {"fail"}
    assert all(r["residual"] != "0" for r in report)


def test_genus_bounds():
    tre = lg_from_braid(BraidWord(2, (1, 1, 1))).value
    assert topo.genus_lower_bound(tre) == 1
    assert topo.alternating_equality(tre, 1)
    assert topo.genus_lower_bound(ONE) == 0
    with pytest.raises(ValueError):
        topo.genus_lower_bound(ZERO)
    assert topo.alexander_genus_bound(topo.AlexPoly(TREFOIL)) == 1


def test_torus_knot_bound_is_sharp():
    # T(2,5) is alternating with genus 2
    lg = lg_from_braid(BraidWord(2, (1,) * 5)).value
    assert topo.genus_lower_bound(lg) == 2 and topo.alternating_equality(lg, 2)
