import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linksgould import algebra, reps
from linksgould.algebra import GENERATORS, LADDERS
from linksgould.ring import S, U, lift, sp_scale


@pytest.fixture(scope="module")
def v():
    return reps.v_alpha()


def test_relations_hold_on_v(v):
    assert algebra.relations_pass(v)


def test_relations_hold_on_dual_and_tensor(v):
    vd = reps.dual(v)
    assert algebra.relations_pass(vd)
    assert algebra.relations_pass(reps.tensor(v, vd))
    assert algebra.relations_pass(reps.tensor(v, v))


@pytest.mark.parametrize("g", GENERATORS)
def test_antipode_and_counit_axioms(v, g):
    assert algebra.antipode_compatible(v, g)
    assert algebra.counit_compatible(v, g)


def _perturbed(rep, g, factor):
    mats = dict(rep.mats)
    mats[g] = sp_scale(mats[g], factor)
    return dataclasses.replace(rep, mats=mats)


@given(st.sampled_from(LADDERS), st.sampled_from([2, -1, S, U]))
def test_perturbation_is_detected(g, factor):
    # rescaling one ladder generator breaks an interchange relation
    rep = _perturbed(reps.v_alpha(), g, lift(factor))
    bad = [r.name for r in algebra.check_relations(rep) if not r.ok]
    assert bad, f"scaling {g} went unnoticed"


def test_first_failure_coordinates(v):
    rep = _perturbed(v, "E21", lift(3))
    res = [r for r in algebra.check_relations(rep) if not r.ok]
    assert all(r.first_failure is not None for r in res)


@pytest.mark.parametrize("g", GENERATORS)
def test_coproduct_preserves_parity(g):
    for term in algebra.coproduct(g).terms:
        assert (algebra.word_parity(term.left) + algebra.word_parity(term.right)) % 2 == algebra.parity(g)
