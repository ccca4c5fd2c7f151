import pytest

from linksgould import reps
from linksgould.ring import ZERO, sp_mul
from linksgould.algebra import DERIVED


@pytest.fixture(scope="module")
def v():
    return reps.v_alpha()


def test_grading_matches_sigma(v):
    assert reps.grading_matches_sigma(v)
    assert reps.grading_matches_sigma(reps.dual(v))


def test_derived_generators_consistent(v):
    res = reps.derived_consistent(v, reps.dual(v))
    assert set(res) == set(DERIVED) and all(res.values())


@pytest.mark.parametrize("name", ["Omega+", "mho+", "Omega-", "mho-"])
def test_caps_cups_are_module_maps(name):
    assert reps.is_module_map(reps.caps_cups()[name])


def test_zigzags():
    z = reps.zigzags()
    assert len(z) == 4 and all(z.values())


def test_quantum_dimension_vanishes():
    assert reps.quantum_dimension() == ZERO


def test_pivot_ribbon_product_is_scalar(v):
    kg = sp_mul(reps.ribbon_k(v), reps.pivot(v))
    diag = {kg[(i, i)] for i in range(4)}
    assert len(diag) == 1 and all(i == j for i, j in kg)


def test_to_json_renders(v):
    assert '"E21"' in v.to_json()
