"""Concrete modules: V_alpha, its dual, tensor products and the duality morphisms.

Matrices are sparse dicts ``{(row, col): FracBi}`` with 0-based indices.  The
tensor basis of ``R1 (x) R2`` is ordered lexicographically, ``i * dim2 + j``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from . import algebra
from .algebra import DERIVED, GENERATORS, coproduct_sigma, word_matrix, wordsum_matrix
from .ring import (
    ONE,
    Q,
    QA,
    S,
    U,
    FracBi,
    SparseMat,
    lift,
    qbracket,
    ALPHA,
    ALPHA1,
    render,
    sp_add,
    sp_diag,
    sp_eye,
    sp_kron,
    sp_mul,
    sp_scale,
    sp_transpose,
)


@dataclass(frozen=True)
class Rep:
    """A finite-dimensional module: one matrix per generator symbol."""

    dim: int
    grading: Tuple[int, ...]
    mats: Mapping[str, SparseMat] = field(repr=False)
    label: str = ""

    def matrix(self, g: str) -> SparseMat:
        try:
            return self.mats[g]
        except KeyError:
            raise KeyError(f"{self.label or 'rep'} has no matrix for {g}") from None

    def act(self, word: algebra.Word) -> SparseMat:
        return word_matrix(self, word)

    def to_json(self, style: str = "su") -> str:
        return json.dumps(dump_matrices(self.mats, style), indent=1, sort_keys=True)


def dump_matrices(mats: Mapping[str, SparseMat], style: str = "su") -> Dict[str, list]:
    return {g: sorted([i, j, render(x, style)] for (i, j), x in m.items()) for g, m in mats.items()}


def _with_derived(mats: Dict[str, SparseMat]) -> Dict[str, SparseMat]:
    """E31 = E21 E32 - q^-1 E32 E21 and E13 = E23 E12 - q E12 E23."""
    m = mats
    m["E31"] = sp_add(sp_mul(m["E21"], m["E32"]), sp_mul(m["E32"], m["E21"]), -Q.inv())
    m["E13"] = sp_add(sp_mul(m["E23"], m["E12"]), sp_mul(m["E12"], m["E23"]), -Q)
    return m


def _complete_cartans(mats: Dict[str, SparseMat]) -> None:
    """Fill K_i, K_i^-1 and K_i^{-1/2} from the diagonal half-Cartans."""
    for i in "123":
        h = mats[f"K{i}h"]
        mats[f"K{i}"] = sp_mul(h, h)
        hi = {k: v.inv() for k, v in h.items()}
        mats[f"K{i}hi"] = hi
        mats[f"K{i}i"] = sp_mul(hi, hi)


def _unit(i: int, j: int, x) -> SparseMat:
    return {(i, j): lift(x)}


def v_alpha() -> Rep:
    """The typical 4-dimensional module V_alpha in the basis e1..e4."""
    si = S.inv()
    mats: Dict[str, SparseMat] = {
        "K1h": sp_diag([1, 1, si, si]),
        "K2h": sp_diag([1, si, 1, si]),
        # q^{E33/2} = q^{alpha/2} diag(1, q^{1/2}, q^{1/2}, q)
        "K3h": sp_diag([U, U * S, U * S, U * S * S]),
        "E21": _unit(1, 2, -1),
        "E12": _unit(2, 1, -1),
        "E32": sp_add(_unit(0, 1, 1), _unit(2, 3, 1)),
        "E23": sp_add(_unit(1, 0, qbracket(ALPHA)), _unit(3, 2, qbracket(ALPHA1))),
        "sig": sp_diag([1, -1, -1, 1]),
    }
    _complete_cartans(mats)
    return Rep(4, (0, 1, 1, 0), _with_derived(mats), "V_alpha")


def counit_rep() -> Rep:
    mats = {g: ({(0, 0): lift(algebra.counit(g))} if algebra.counit(g) else {}) for g in GENERATORS}
    return Rep(1, (0,), mats, "trivial")


def dual(r: Rep) -> Rep:
    """pi*(x) = pi(S^sigma(x))^T."""
    mats: Dict[str, SparseMat] = {}
    for g in GENERATORS:
        if g in DERIVED:
            continue
        mats[g] = sp_transpose(wordsum_matrix(r, algebra.antipode_sigma(g)))
    return Rep(r.dim, r.grading, _with_derived(mats), f"{r.label}*")


def coproduct_matrix(g: str, r1: Rep, r2: Rep) -> SparseMat:
    """Matrix of Delta^sigma(g) acting on r1 (x) r2."""
    out: SparseMat = {}
    for t in coproduct_sigma(g).terms:
        out = sp_add(out, sp_kron(word_matrix(r1, t.left), word_matrix(r2, t.right), r2.dim), t.coeff)
    return out


def tensor(r1: Rep, r2: Rep) -> Rep:
    """r1 (x) r2 through Delta^sigma; E31 and E13 are recomputed from products."""
    mats = {g: coproduct_matrix(g, r1, r2) for g in GENERATORS if g not in DERIVED}
    grading = tuple((a + b) % 2 for a in r1.grading for b in r2.grading)
    return Rep(r1.dim * r2.dim, grading, _with_derived(mats), f"{r1.label}(x){r2.label}")


def derived_consistent(r1: Rep, r2: Rep) -> Dict[str, bool]:
    """Three-term coproduct formulas for E31, E13 versus products in the tensor module."""
    t = tensor(r1, r2)
    return {g: sp_add(coproduct_matrix(g, r1, r2), t.matrix(g), -1) == {} for g in DERIVED}


def grading_matches_sigma(r: Rep) -> bool:
    expected = sp_diag([(-1) ** p for p in r.grading])
    return sp_add(r.matrix("sig"), expected, -1) == {}


# -- distinguished elements -------------------------------------------------------
def pivot(r: Rep) -> SparseMat:
    """g = q^{-E11} q^{E22} q^{E33} sigma."""
    return word_matrix(r, ("K1i", "K2", "K3", "sig"))


def ribbon_k(r: Rep) -> SparseMat:
    """K = q^{-2E33} q^{-2E22} sigma."""
    return word_matrix(r, ("K3i", "K3i", "K2i", "K2i", "sig"))


# -- caps and cups ----------------------------------------------------------------
@dataclass(frozen=True)
class Pairing:
    """A duality morphism given by the diagonal weights of its (i, i*) pairing.

    ``kind`` is "cap" (pair -> scalars) or "cup" (scalars -> pair); ``legs`` gives
    the tensor factors of the pair from left to right, "V" or "V*".
    """

    name: str
    kind: str
    legs: Tuple[str, str]
    weights: Tuple[FracBi, ...]

    @property
    def matrix(self) -> SparseMat:
        return sp_diag(self.weights)

    def vector(self) -> SparseMat:
        """As a 16x1 (cup) or 1x16 (cap) matrix on the pair."""
        n = len(self.weights)
        if self.kind == "cup":
            return {(i * n + i, 0): w for i, w in enumerate(self.weights)}
        return {(0, i * n + i): w for i, w in enumerate(self.weights)}


def caps_cups(r: Optional[Rep] = None) -> Dict[str, Pairing]:
    """Omega^+ = mho^+ = identity, Omega^- = pi(K), mho^- = pi(K)^-1.

    Leg conventions (fixed by the module-map property and the zig-zags):
    Omega^+ : V* (x) V -> C,  mho^+ : C -> V (x) V*,
    Omega^- : C -> V* (x) V,  mho^- : V (x) V* -> C.
    """
    r = r or v_alpha()
    k = ribbon_k(r)
    kd = tuple(k.get((i, i), lift(0)) for i in range(r.dim))
    one = tuple(ONE for _ in range(r.dim))
    return {
        "Omega+": Pairing("Omega+", "cap", ("V*", "V"), one),
        "mho+": Pairing("mho+", "cup", ("V", "V*"), one),
        "Omega-": Pairing("Omega-", "cup", ("V*", "V"), kd),
        "mho-": Pairing("mho-", "cap", ("V", "V*"), tuple(x.inv() for x in kd)),
    }


def _module_of(legs: Tuple[str, str], v: Rep, vd: Rep) -> Rep:
    pick = {"V": v, "V*": vd}
    return tensor(pick[legs[0]], pick[legs[1]])


def is_module_map(p: Pairing, r: Optional[Rep] = None) -> bool:
    """x . cup = eps(x) cup and cap . x = eps(x) cap for every generator x."""
    r = r or v_alpha()
    pair = _module_of(p.legs, r, dual(r))
    vec = p.vector()
    for g in GENERATORS:
        eps = algebra.counit(g)
        m = pair.matrix(g)
        lhs = sp_mul(m, vec) if p.kind == "cup" else sp_mul(vec, m)
        if sp_add(lhs, vec, -eps) != {}:
            return False
    return True


def zigzags(r: Optional[Rep] = None) -> Dict[str, bool]:
    """Snake identities for the two cap/cup pairs, as operators on V and V*."""
    r = r or v_alpha()
    n = r.dim
    cc = caps_cups(r)
    eye = sp_eye(n)
    out = {}
    # (id_V (x) Omega+) o (mho+ (x) id_V) = id_V
    z1 = sp_mul(sp_kron(eye, cc["Omega+"].vector(), 1, n * n), sp_kron(cc["mho+"].vector(), eye, n))
    out["Omega+ mho+ on V"] = sp_add(z1, eye, -1) == {}
    # (Omega+ (x) id_V*) o (id_V* (x) mho+) = id_V*
    z2 = sp_mul(sp_kron(cc["Omega+"].vector(), eye, n), sp_kron(eye, cc["mho+"].vector(), n * n, 1))
    out["Omega+ mho+ on V*"] = sp_add(z2, eye, -1) == {}
    # (mho- (x) id_V) o (id_V (x) Omega-) = id_V
    z3 = sp_mul(sp_kron(cc["mho-"].vector(), eye, n), sp_kron(eye, cc["Omega-"].vector(), n * n, 1))
    out["mho- Omega- on V"] = sp_add(z3, eye, -1) == {}
    # (id_V* (x) mho-) o (Omega- (x) id_V*) = id_V*
    z4 = sp_mul(sp_kron(eye, cc["mho-"].vector(), 1, n * n), sp_kron(cc["Omega-"].vector(), eye, n))
    out["mho- Omega- on V*"] = sp_add(z4, eye, -1) == {}
    return out


def quantum_dimension(r: Optional[Rep] = None) -> FracBi:
    r = r or v_alpha()
    k = ribbon_k(r)
    out = lift(0)
    for i in range(r.dim):
        out = out + k.get((i, i), lift(0))
    return out
