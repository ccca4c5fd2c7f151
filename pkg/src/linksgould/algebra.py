"""Presentation data for the bosonized quantum superalgebra U_q gl(2|1)^sigma.

Generators are plain strings:

* ``K1 K2 K3``        q^{E_i^i}        (``K1i`` ... inverses)
* ``K1h K2h K3h``     q^{E_i^i / 2}    (``K1hi`` ... inverses)
* ``E21 E12 E32 E23`` ladder generators, E21 = E_2^1 etc.
* ``E31 E13``         derived odd generators
* ``sig``             the parity element adjoined by bosonization

Everything here is symbolic; it becomes concrete only once a representation
supplies a matrix for every generator (see ``reps``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .ring import ONE, Q, ZERO, FracBi, SparseMat, lift, sp_add, sp_eye, sp_kron, sp_mul, sp_scale

Word = Tuple[str, ...]

CARTANS = tuple(f"K{i}{x}" for i in "123" for x in ("", "i", "h", "hi"))
LADDERS = ("E21", "E12", "E32", "E23")
DERIVED = ("E31", "E13")
GENERATORS = CARTANS + LADDERS + DERIVED + ("sig",)
# the nine generator symbols whose images are checked for q^alpha dependence
NINE = ("K1", "K2", "K3", "E21", "E12", "E32", "E23", "E31", "E13")
# (superscript, subscript) of each ladder symbol E_sub^sup
INDICES = {"E21": (1, 2), "E12": (2, 1), "E32": (2, 3), "E23": (3, 2), "E31": (1, 3), "E13": (3, 1)}
GRADE = {1: 0, 2: 0, 3: 1}


def parity(g: str) -> int:
    if g in ("E32", "E23", "E31", "E13"):
        return 1
    return 0


def word_parity(w: Word) -> int:
    return sum(parity(g) for g in w) % 2


def half(**exps: int) -> Word:
    """Half-Cartan product q^{1/2 sum c_i E_i^i}, e.g. half(k1=1, k2=-1)."""
    out: List[str] = []
    for name, c in sorted(exps.items()):
        i = name[1]
        out += [f"K{i}h" if c > 0 else f"K{i}hi"] * abs(c)
    return tuple(out)


@dataclass(frozen=True)
class Term:
    coeff: FracBi
    left: Word
    right: Word


@dataclass(frozen=True)
class TensorWord:
    """Formal sum of coeff * (left word) (x) (right word)."""

    terms: Tuple[Term, ...]

    @staticmethod
    def of(*terms: Tuple[object, Word, Word]) -> "TensorWord":
        ts = tuple(Term(lift(c), tuple(l), tuple(r)) for c, l, r in terms if lift(c))
        return TensorWord(tuple(sorted(ts, key=lambda t: (t.left, t.right))))

    def map(self, f_left: Callable, f_right: Callable) -> "TensorWord":
        return TensorWord.of(*((t.coeff, f_left(t.left), f_right(t.right)) for t in self.terms))


def _sigma_if_odd(left: Word, right: Word) -> Word:
    return left + ("sig",) if word_parity(right) else left


def coproduct(g: str) -> TensorWord:
    """The (super) coproduct before bosonization."""
    qq = Q - Q.inv()
    if g in CARTANS or g == "sig":
        return TensorWord.of((1, (g,), (g,)))
    if g in ("E21", "E12"):
        return TensorWord.of((1, (g,), half(k1=-1, k2=1)), (1, half(k1=1, k2=-1), (g,)))
    if g in ("E32", "E23"):
        return TensorWord.of((1, (g,), half(k2=-1, k3=-1)), (1, half(k2=1, k3=1), (g,)))
    if g == "E13":
        return TensorWord.of(
            (1, (g,), half(k1=-1, k3=-1)),
            (1, half(k1=1, k3=1), (g,)),
            (-qq, half(k1=1, k2=-1) + ("E23",), ("E12",) + half(k2=-1, k3=-1)),
        )
    if g == "E31":
        return TensorWord.of(
            (1, (g,), half(k1=-1, k3=-1)),
            (1, half(k1=1, k3=1), (g,)),
            (qq, half(k2=1, k3=1) + ("E21",), ("E32",) + half(k1=-1, k2=1)),
        )
    raise KeyError(g)


def coproduct_sigma(g: str) -> TensorWord:
    """Bosonized coproduct: sum x_i sigma^{[y_i]} (x) y_i."""
    if g == "sig":
        return TensorWord.of((1, ("sig",), ("sig",)))
    return TensorWord.of(*((t.coeff, _sigma_if_odd(t.left, t.right), t.right) for t in coproduct(g).terms))


def _cartan_inverse(g: str) -> str:
    return g[:-1] if g.endswith("i") else g + "i"


WordSum = Tuple[Tuple[FracBi, Word], ...]


def antipode(g: str) -> WordSum:
    """Super antipode S on a generator (derived ones through the anti-homomorphism rule)."""
    if g in CARTANS:
        return ((ONE, (_cartan_inverse(g),)),)
    if g == "sig":
        return ((ONE, ("sig",)),)
    base = {"E21": -Q.inv(), "E12": -Q, "E32": lift(-1), "E23": lift(-1)}
    if g in base:
        return ((base[g], (g,)),)
    # S(xy) = (-1)^{[x][y]} S(y) S(x)
    a, b, c = {"E31": ("E21", "E32", -Q.inv()), "E13": ("E23", "E12", -Q)}[g]
    out = []
    for x, y, coeff in ((a, b, ONE), (b, a, c)):
        sign = -1 if parity(x) and parity(y) else 1
        for cy, wy in antipode(y):
            for cx, wx in antipode(x):
                out.append((coeff * sign * cy * cx, wy + wx))
    return tuple(out)


def antipode_sigma(g: str) -> WordSum:
    """S^sigma(x) = sigma^{[x]} S(x); S^sigma(sigma) = sigma."""
    if g == "sig":
        return ((ONE, ("sig",)),)
    pre = ("sig",) if parity(g) else ()
    if g in DERIVED:
        # anti-homomorphism of the ordinary Hopf algebra, applied to the defining words
        a, b, c = {"E31": ("E21", "E32", -Q.inv()), "E13": ("E23", "E12", -Q)}[g]
        out = []
        for x, y, coeff in ((a, b, ONE), (b, a, c)):
            for cy, wy in antipode_sigma(y):
                for cx, wx in antipode_sigma(x):
                    out.append((coeff * cy * cx, wy + wx))
        return tuple(out)
    return tuple((c, pre + w) for c, w in antipode(g))


def counit(g: str) -> FracBi:
    if g in CARTANS or g == "sig":
        return ONE
    return ZERO


def counit_word(w: Word) -> FracBi:
    out = ONE
    for g in w:
        out = out * counit(g)
    return out


# -- evaluation in a representation -------------------------------------------------
class HasMatrices:
    dim: int

    def matrix(self, g: str) -> SparseMat:  # pragma: no cover - protocol
        raise NotImplementedError


def word_matrix(rep, w: Word) -> SparseMat:
    m = sp_eye(rep.dim)
    for g in w:
        m = sp_mul(m, rep.matrix(g))
    return m


def wordsum_matrix(rep, ws: WordSum) -> SparseMat:
    out: SparseMat = {}
    for c, w in ws:
        out = sp_add(out, word_matrix(rep, w), c)
    return out


# -- relations ------------------------------------------------------------------------
@dataclass(frozen=True)
class RelationResult:
    name: str
    ok: bool
    first_failure: Optional[Tuple[int, int]] = None


def _diff(a: SparseMat, b: SparseMat) -> Optional[Tuple[int, int]]:
    d = sp_add(a, b, -1)
    return min(d) if d else None


def _qbracket_mat(rep, word: Word) -> SparseMat:
    """[H]_q for q^H given as a Cartan word (diagonal matrices)."""
    k = word_matrix(rep, word)
    kinv = word_matrix(rep, tuple(_cartan_inverse(g) for g in reversed(word)))
    return sp_scale(sp_add(k, kinv, -1), (Q - Q.inv()).inv())


def relation_set(rep) -> List[Tuple[str, SparseMat, SparseMat]]:
    """Every defining identity as (name, lhs, rhs) matrices in ``rep``."""
    M = rep.matrix
    mul = sp_mul
    rels: List[Tuple[str, SparseMat, SparseMat]] = []
    ks = ("K1", "K2", "K3")
    for i, a in enumerate(ks):
        for b in ks[i + 1:]:
            rels.append((f"cartan {a}{b} commute", mul(M(a), M(b)), mul(M(b), M(a))))
    for a in (1, 2, 3):
        sgn = -1 if GRADE[a] else 1
        ka = M(f"K{a}") if sgn > 0 else M(f"K{a}i")
        kai = M(f"K{a}i") if sgn > 0 else M(f"K{a}")
        for g in LADDERS:
            sup, sub = INDICES[g]
            e = sgn * ((a == sup) - (a == sub))
            rels.append((f"cartan K{a} conjugates {g}", mul(mul(ka, M(g)), kai), sp_scale(M(g), Q ** e)))
    for g in ("E23", "E32"):
        rels.append((f"{g} squared", mul(M(g), M(g)), {}))
    rels.append(("E21 commutes with E23", mul(M("E21"), M("E23")), mul(M("E23"), M("E21"))))
    rels.append(("E12 commutes with E32", mul(M("E12"), M("E32")), mul(M("E32"), M("E12"))))
    rels.append((
        "interchange E21 E12",
        mul(M("E21"), M("E12")),
        sp_add(_qbracket_mat(rep, ("K1", "K2i")), mul(M("E12"), M("E21"))),
    ))
    rels.append((
        "interchange E32 E23",
        mul(M("E32"), M("E23")),
        sp_add(_qbracket_mat(rep, ("K2", "K3")), mul(M("E23"), M("E32")), -1),
    ))
    rels.append(("serre E21 E31", sp_add(mul(M("E21"), M("E31")), mul(M("E31"), M("E21")), -Q), {}))
    rels.append(("serre E13 E12", sp_add(mul(M("E13"), M("E12")), mul(M("E12"), M("E13")), -Q.inv()), {}))
    sig = M("sig")
    rels.append(("sigma squared", mul(sig, sig), sp_eye(rep.dim)))
    for g in ks + LADDERS:
        sign = -1 if parity(g) else 1
        rels.append((f"sigma {g}", mul(sig, M(g)), sp_scale(mul(M(g), sig), sign)))
    for i in "123":
        rels.append((f"half K{i} squared", mul(M(f"K{i}h"), M(f"K{i}h")), M(f"K{i}")))
        rels.append((f"K{i} inverse", mul(M(f"K{i}"), M(f"K{i}i")), sp_eye(rep.dim)))
        rels.append((f"half K{i} inverse", mul(M(f"K{i}h"), M(f"K{i}hi")), sp_eye(rep.dim)))
    return rels


def check_relations(rep) -> List[RelationResult]:
    dims = {g: rep.dim for g in GENERATORS}
    for g in GENERATORS:
        m = rep.matrix(g)
        if any(i >= dims[g] or j >= dims[g] for i, j in m):
            raise ValueError(f"generator {g} has a matrix of the wrong size")
    return [RelationResult(name, (f := _diff(lhs, rhs)) is None, f) for name, lhs, rhs in relation_set(rep)]


def relations_pass(rep) -> bool:
    return all(r.ok for r in check_relations(rep))


# -- Hopf identities evaluated in a representation ----------------------------------
def _antipode_word_matrix(rep, w: Word) -> SparseMat:
    m = sp_eye(rep.dim)
    for g in reversed(w):
        m = sp_mul(m, wordsum_matrix(rep, antipode_sigma(g)))
    return m


def _delta_matrix(rep, g: str) -> SparseMat:
    out: SparseMat = {}
    for t in coproduct_sigma(g).terms:
        out = sp_add(out, sp_kron(word_matrix(rep, t.left), word_matrix(rep, t.right), rep.dim), t.coeff)
    return out


def antipode_compatible(rep, g: str) -> bool:
    """(S (x) S) Delta(g) = P Delta(S(g)) on rep (x) rep, P the flip."""
    n = rep.dim
    lhs: SparseMat = {}
    for t in coproduct_sigma(g).terms:
        lhs = sp_add(lhs, sp_kron(_antipode_word_matrix(rep, t.left), _antipode_word_matrix(rep, t.right), n), t.coeff)
    rhs: SparseMat = {}
    for c, w in antipode_sigma(g):
        m = sp_eye(n * n)
        for x in w:
            m = sp_mul(m, _delta_matrix(rep, x))
        rhs = sp_add(rhs, m, c)
    flip = {(i * n + j, j * n + i): ONE for i in range(n) for j in range(n)}
    return sp_add(lhs, sp_mul(sp_mul(flip, rhs), flip), -1) == {}


def counit_compatible(rep, g: str) -> bool:
    """(eps (x) id) Delta(g) = g = (id (x) eps) Delta(g) on rep."""
    left: SparseMat = {}
    right: SparseMat = {}
    for t in coproduct_sigma(g).terms:
        left = sp_add(left, word_matrix(rep, t.right), t.coeff * counit_word(t.left))
        right = sp_add(right, word_matrix(rep, t.left), t.coeff * counit_word(t.right))
    target = rep.matrix(g)
    return sp_add(left, target, -1) == {} and sp_add(right, target, -1) == {}
