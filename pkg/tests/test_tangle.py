import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linksgould import tangle as T
from linksgould.ring import ONE, QA, ZERO, sp_eye
from linksgould.tangle import BandOp, BraidWord, Slice, TangleProgram

from strategies import braid_words

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE8 = BraidWord(3, (1, -2, 1, -2))


def lg(b, **kw):
    return T.lg_from_braid(b, **kw).value


# -- braids ----------------------------------------------------------------------------
@given(braid_words())
@settings(max_examples=15)
def test_conjugation_invariance(nw):
    n, w = nw
    if not w:
        return
    assert lg(BraidWord(n, w)) == lg(BraidWord(n, w[1:] + w[:1]))


@given(braid_words(), st.sampled_from([1, -1]))
@settings(max_examples=15)
def test_stabilization_invariance(nw, sign):
    n, w = nw
    assert lg(BraidWord(n, w)) == lg(BraidWord(n + 1, w + (sign * n,)))


@given(braid_words(), st.integers(0, 6), st.sampled_from([1, -1]))
@settings(max_examples=15)
def test_free_cancellation(nw, at, sign):
    n, w = nw
    at = min(at, len(w))
    g = sign * (1 + at % (n - 1))
    assert lg(BraidWord(n, w)) == lg(BraidWord(n, w[:at] + (g, -g) + w[at:]))


def test_unknot_and_unlink():
    assert lg(BraidWord(1, ())) == ONE
    assert lg(BraidWord(2, (1,))) == ONE
    assert lg(BraidWord(2, ())) == ZERO
    assert lg(BraidWord(3, (1,))) == ZERO
    assert T.closure_by_caps(BraidWord(2, ())) == ZERO


def test_amphichiral_figure_eight():
    assert lg(FIGURE8.mirror()) == lg(FIGURE8)
    assert lg(TREFOIL.mirror()) != lg(TREFOIL)


def test_mirror_exchanges_q_alpha_direction():
    a, b = T.LGValue(lg(TREFOIL)), T.LGValue(lg(TREFOIL.mirror()))
    assert a.span == b.span == 4


def test_braid_word_validation_and_json():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    b = BraidWord.from_json(FIGURE8.to_json())
    assert b == FIGURE8 and b.components() == 1 and b.writhe() == 0


def test_exact_mode_ceiling():
    with pytest.raises(ValueError, match="ceiling"):
        T.lg_from_braid(BraidWord(4, (1, 2, 3)), max_strands=3)


@pytest.mark.parametrize("b", [TREFOIL, FIGURE8, BraidWord(3, (1, 1, 2, -1, 2))])
def test_interp_matches_exact(b):
    assert lg(b, mode="interp") == lg(b)


@pytest.mark.parametrize("b", [TREFOIL, FIGURE8, BraidWord(3, (1, 2, 1, 2))])
def test_closure_by_caps_matches_trace(b):
    assert T.closure_by_caps(b) == lg(b)


# -- programs --------------------------------------------------------------------------
def test_program_validation():
    with pytest.raises(T.ProgramError):
        TangleProgram(("V", "V"), (Slice("cap", 0, "Omega+"),))
    with pytest.raises(T.ProgramError):
        TangleProgram(("X",), ())
    with pytest.raises(T.ProgramError):
        TangleProgram(("V",), (Slice("X+", 0),))


def test_program_json_round_trip():
    p = TangleProgram(("V",), (Slice("cup", 1, "mho+"), Slice("X+", 0), Slice("cap", 1, "mho-")))
    assert TangleProgram.from_json(p.to_json()) == p


def test_kink_program_is_identity():
    p = TangleProgram(("V",), (Slice("cup", 1, "mho+"), Slice("X+", 0), Slice("cap", 1, "mho-")))
    assert T.eval_program(p) == sp_eye(4)


@pytest.mark.parametrize(
    "src,slices",
    [
        (("V", "V*"), (Slice("X+", 0), Slice("X-", 0))),
        (("V*", "V"), (Slice("X+", 0), Slice("cap", 0, "mho-"), Slice("cup", 0, "Omega-"))),
        (("V",), (Slice("cup", 0, "mho+"), Slice("X-", 1), Slice("X+", 1))),
    ],
)
def test_sparse_and_dense_evaluation_agree(src, slices):
    p = TangleProgram(src, slices)
    assert T.eval_program(p) == T.dense_operator(p)


def test_compose():
    a = TangleProgram(("V", "V"), (Slice("X+", 0),))
    b = TangleProgram(("V", "V"), (Slice("X-", 0),))
    assert T.eval_program(a.compose(b)) == sp_eye(16)
    with pytest.raises(T.ProgramError):
        a.compose(TangleProgram(("V",), ()))


# -- surfaces --------------------------------------------------------------------------
def test_genus_one_shapes():
    bt = T.genus_one(-1, -1)
    s = bt.surface()
    assert s.genus() == 1 and s.link_components() == 1 and s.slot_kinds() == ("W*", "W*", "W", "W")
    assert T.BottomTangle.from_json(bt.to_json()) == bt


def test_bottom_tangle_validation():
    with pytest.raises(T.ProgramError):
        T.BottomTangle(1, (BandOp("cup", 0), BandOp("cup", 2)))
    with pytest.raises(T.ProgramError):
        T.BottomTangle(2, T.genus_one(1, 1).ops)


@pytest.mark.parametrize(
    "a,b,ref", [(-1, -1, TREFOIL), (1, -1, FIGURE8), (-1, 1, FIGURE8), (1, 1, TREFOIL.mirror())]
)
def test_surface_pipeline(a, b, ref):
    r = T.surface_pipeline(T.genus_one(a, b), ref)
    assert r.G.u_free()
    assert r.by_boxes == r.by_caps == r.lg.value
    assert r.scalar == r.lg.value * r.bookkeeping == r.lg.value * QA**4
    assert r.dz <= 8 and r.dt <= 0


def test_genus_zero_pipeline():
    r = T.surface_pipeline(T.BottomTangle(0, ()))
    assert r.lg.value == ONE


def test_early_close_matches_late_close():
    late = T.SurfaceDiagram((2, 2), (BandOp("cup", 0), BandOp("cup", 2), BandOp("X+", 1), BandOp("X+", 1), BandOp("T-", 2)))
    early = T.SurfaceDiagram(
        (2,),
        (BandOp("cup", 0), BandOp("cup", 2), BandOp("X+", 1), BandOp("X+", 1), BandOp("close", 0, count=2), BandOp("T-", 0)),
    )
    a = T._schur(T.close_surface(late, T.surface_vector(late)))
    b = T._schur(T.close_surface(early, T.surface_vector(early)))
    assert a == b and not a.is_zero()
    assert late.surface_components() == early.surface_components() == 2
    assert late.link_components() == early.link_components()


def test_close_op_validation():
    with pytest.raises(T.ProgramError):
        T.SurfaceDiagram((0,), (BandOp("cup", 0), BandOp("close", 0, count=3)))


# -- admissible diagrams and cables --------------------------------------------------------
def test_split_disks_vanish():
    d = T.split_disks_example()
    assert d.surface.genus() == 0
    assert T.admissible_eval(d).lg.value == ZERO


@pytest.mark.slow
def test_boundary_link_span_bound():
    d = T.boundary_link_example()
    assert (d.k, d.l, d.m, d.surface.genus()) == (2, 4, 2, 2)
    r = T.admissible_eval(d)
    assert not r.lg.value.is_zero()
    assert r.span <= r.bound == 8
    assert r.rescaled_lg == r.lg.value * r.bookkeeping


def test_unclasped_boundary_link_is_split():
    ops = (
        BandOp("cup", 0), BandOp("cup", 2), BandOp("X+", 1), BandOp("T-", 0), BandOp("T-", 1),
        BandOp("close", 0, count=4),
        BandOp("cup", 0), BandOp("cup", 2), BandOp("X+", 1), BandOp("T-", 0), BandOp("T+", 1),
    )
    d = T.AdmissibleDiagram(2, 4, 2, T.SurfaceDiagram((4,), ops))
    assert T.admissible_eval(d).lg.value == ZERO


def test_admissible_count_validation():
    with pytest.raises(T.ProgramError):
        T.AdmissibleDiagram(2, 0, 1, T.SurfaceDiagram((0, 0), ()))


def test_cables():
    assert T.cable(TREFOIL, 1) == TREFOIL
    assert lg(T.cable(BraidWord(1, ()), 2)) == ZERO
    c = T.cable(TREFOIL, 2)
    assert c.strands == 4 and c.components() == 2
    v = T.LGValue(lg(c))
    assert v.span <= 8
    with pytest.raises(ValueError):
        T.cable(BraidWord(2, ()), 2)


def test_lgvalue_json_schema():
    d = T.LGValue(lg(TREFOIL)).to_dict()
    assert set(d) == {"lg_qqa", "lg_t0t1", "span", "genus_lower_bound", "dz", "dt"}
    assert json.loads(json.dumps(d)) == d
