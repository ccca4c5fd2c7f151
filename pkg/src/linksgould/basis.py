"""The basis B_alpha of V_alpha (x) V_alpha*, change-of-basis matrices and degree reductions.

Internal indices are natural: column k-1 is v_k, row 4*(b-1)+(c-1) is e_b (x) e_c*.
The display orderings below are kept as metadata so tables can be compared
entrywise in their customary layout.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import algebra, reps
from .algebra import GENERATORS
from .ring import (
    NEG_INF,
    ONE,
    QA,
    FracBi,
    SparseMat,
    deg_t,
    deg_z,
    render,
    sp_add,
    sp_eye,
    sp_inverse,
    sp_kron,
    sp_mul,
    sp_scale,
    sp_transpose,
)

N = 16
# words applied to v = e1 (x) e1*, leftmost letter acts last
BASIS_WORDS: Tuple[Tuple[str, ...], ...] = (
    (),
    ("E32",),
    ("E31",),
    ("E13",),
    ("E23",),
    ("E32", "E31"),
    ("E32", "E13"),
    ("E32", "E23"),
    ("E31", "E13"),
    ("E31", "E23"),
    ("E13", "E23"),
    ("E31", "E13", "E23"),
    ("E32", "E13", "E23"),
    ("E32", "E31", "E23"),
    ("E32", "E31", "E13"),
    ("E32", "E31", "E13", "E23"),
)
COLUMN_ORDER = (1, 8, 9, 16, 2, 5, 15, 12, 3, 4, 14, 13, 6, 11, 10, 7)
ROW_ORDER = (
    (1, 1), (2, 2), (3, 3), (4, 4), (1, 2), (2, 1), (3, 4), (4, 3),
    (1, 3), (3, 1), (2, 4), (4, 2), (1, 4), (4, 1), (2, 3), (3, 2),
)


def row_index(b: int, c: int) -> int:
    return 4 * (b - 1) + (c - 1)


class UDependence(ArithmeticError):
    """An entry that should be free of q^alpha is not."""


@dataclass(frozen=True)
class BasisChange:
    """A 16x16 matrix with the display orderings of its rows and columns."""

    name: str
    matrix: SparseMat
    column_order: Tuple[int, ...] = COLUMN_ORDER
    row_order: Tuple[Tuple[int, int], ...] = ROW_ORDER

    def entry(self, row: Tuple[int, int], col: int) -> FracBi:
        from .ring import ZERO

        return self.matrix.get((row_index(*row), col - 1), ZERO)

    def display(self) -> List[List[FracBi]]:
        """Rows and columns permuted into the display orderings."""
        return [[self.entry(r, c) for c in self.column_order] for r in self.row_order]

    def to_json(self, style: str = "su") -> str:
        cells = [[render(x, style) if x else "0" for x in row] for row in self.display()]
        return json.dumps({"name": self.name, "columns": self.column_order, "rows": self.row_order, "cells": cells})


@dataclass(frozen=True)
class DegMatrix:
    """Monomial reduction: each nonzero entry is var^exponent."""

    name: str
    var: str
    exponents: Dict[Tuple[int, int], Fraction]

    def entry(self, row: Tuple[int, int], col: int) -> Optional[Fraction]:
        return self.exponents.get((row_index(*row), col - 1))

    def display(self) -> List[List[Optional[Fraction]]]:
        return [[self.entry(r, c) for c in COLUMN_ORDER] for r in ROW_ORDER]


# -- the basis -------------------------------------------------------------------
@lru_cache(maxsize=None)
def _modules():
    v = reps.v_alpha()
    vd = reps.dual(v)
    return v, vd, reps.tensor(v, vd)


def build_v_basis() -> List[Dict[int, FracBi]]:
    """The sixteen vectors v_k as sparse coordinate dicts in the e_b (x) e_c* basis."""
    pi = _modules()[2]
    out = []
    for word in BASIS_WORDS:
        vec: SparseMat = {(0, 0): ONE}
        for g in reversed(word):
            vec = sp_mul(pi.matrix(g), vec)
        out.append({i: x for (i, _), x in vec.items()})
    return out


@lru_cache(maxsize=None)
def matrix_A() -> BasisChange:
    cols = build_v_basis()
    m = {(i, k): x for k, col in enumerate(cols) for i, x in col.items()}
    return BasisChange("A", m)


def is_block_triangular(bc: BasisChange) -> bool:
    """Upper triangular with nonzero diagonal in the display orderings."""
    d = bc.display()
    for i in range(N):
        if not d[i][i]:
            return False
        if any(d[i][j] for j in range(i)):
            return False
    return True


@lru_cache(maxsize=None)
def _a_inverse() -> SparseMat:
    return sp_inverse(matrix_A().matrix, N)


def conjugate_rep(target: reps.Rep, change: SparseMat, change_inv: SparseMat, label: str) -> reps.Rep:
    mats = {g: sp_mul(sp_mul(change_inv, target.matrix(g)), change) for g in GENERATORS}
    grading = tuple(0 if mats["sig"].get((i, i)) == ONE else 1 for i in range(N))
    return reps.Rep(N, grading, mats, label)


def _require_u_free(rep: reps.Rep) -> None:
    for g in GENERATORS:
        for key, x in rep.matrix(g).items():
            if x.u_support() != {0}:
                raise UDependence(f"{rep.label}({g}) entry {key} depends on q^alpha: {render(x, 'qqa')}")


@lru_cache(maxsize=None)
def theta_rep() -> reps.Rep:
    """Theta(g) = A^-1 Pi(g) A; every entry must be free of q^alpha."""
    rep = conjugate_rep(_modules()[2], matrix_A().matrix, _a_inverse(), "Theta")
    _require_u_free(rep)
    return rep


def u_free_generators(rep: reps.Rep) -> Dict[str, bool]:
    return {g: all(x.u_support() == {0} for x in rep.matrix(g).values()) for g in algebra.NINE + ("sig",)}


# -- the dual model ------------------------------------------------------------------
def _flip() -> SparseMat:
    """theta: e_i** (x) e_j*  ->  (e_j (x) e_i*)*."""
    return {(row_index(j, i), row_index(i, j)): ONE for i in range(1, 5) for j in range(1, 5)}


@lru_cache(maxsize=None)
def matrix_F() -> BasisChange:
    """F = (a^-1)^# o theta o rho o a, with rho = Psi_g (x) id."""
    v = _modules()[0]
    a = matrix_A().matrix
    rho = sp_kron(reps.pivot(v), sp_eye(4), 4)
    f = sp_mul(sp_transpose(a), sp_mul(_flip(), sp_mul(rho, a)))
    return BasisChange("F", f)


@lru_cache(maxsize=None)
def matrix_Atilde() -> BasisChange:
    """Atilde = A F^-1."""
    f = matrix_F().matrix
    return BasisChange("Atilde", sp_mul(matrix_A().matrix, sp_inverse(f, N)))


@lru_cache(maxsize=None)
def theta_dual_rep() -> reps.Rep:
    """W* transported through Atilde: Atilde^-1 Pi(x) Atilde."""
    at = matrix_Atilde().matrix
    rep = conjugate_rep(_modules()[2], at, sp_inverse(at, N), "Theta*")
    _require_u_free(rep)
    return rep


def dual_of_theta() -> reps.Rep:
    """The abstract dual module of Theta, for comparison with theta_dual_rep."""
    return reps.dual(theta_rep())


# -- degree reductions ---------------------------------------------------------------
def _reduce(name: str, m: SparseMat, var: str) -> DegMatrix:
    f = deg_z if var == "z" else deg_t
    return DegMatrix(name, var, {k: Fraction(f(x)) for k, x in m.items()})


@lru_cache(maxsize=None)
def rescaled_Atilde() -> SparseMat:
    """q^alpha Atilde, the version the reduction tables are taken from."""
    return sp_scale(matrix_Atilde().matrix, QA)


def reductions() -> Dict[str, DegMatrix]:
    a = matrix_A().matrix
    at = rescaled_Atilde()
    return {
        "A_z": _reduce("A_z", a, "z"),
        "A_t": _reduce("A_t", a, "t"),
        "Atilde_z": _reduce("Atilde_z", at, "z"),
        "Atilde_t": _reduce("Atilde_t", at, "t"),
    }


# -- weight graphs -------------------------------------------------------------------
Edge = Tuple[int, int, Fraction]


def transition_weights(deg: DegMatrix) -> List[Edge]:
    """Edges (b, c, weight) for every nonzero entry in row e_b (x) e_c*."""
    out = []
    for (r, _), w in sorted(deg.exponents.items()):
        b, c = divmod(r, 4)
        out.append((b + 1, c + 1, w))
    return out


def weight_graph(deg: DegMatrix) -> Dict[Tuple[int, int], frozenset]:
    g: Dict[Tuple[int, int], set] = {}
    for b, c, w in transition_weights(deg):
        g.setdefault((b, c), set()).add(w)
    return {k: frozenset(v) for k, v in g.items()}


def weight_coherence() -> Dict[str, bool]:
    """The four data-level statements about the t-weights of A and q^alpha Atilde."""
    red = reductions()
    gb = weight_graph(red["A_t"])
    gc = weight_graph(red["Atilde_t"])
    swap23 = {1: 1, 2: 3, 3: 2, 4: 4}
    out = {}
    out["b and c graphs coincide"] = gb == gc
    out["e2 and e3 symmetric"] = all(
        g.get((swap23[b], swap23[c])) == ws for g in (gb, gc) for (b, c), ws in g.items()
    )
    out["single weight per transition"] = all(len(ws) == 1 for g in (gb, gc) for ws in g.values())
    out["reverse transition has opposite weight"] = all(
        g.get((c, b)) == frozenset(-w for w in ws) for g in (gb, gc) for (b, c), ws in g.items()
    )
    return out
