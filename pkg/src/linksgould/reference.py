"""Regression against the published tables of matrices, stored as LaTeX cells.

Each table is rebuilt by the construction code and compared entrywise; a failing
table reports its first mismatching cell.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import implicit_multiplication_application, parse_expr, standard_transformations

from . import basis, reps
from .ring import ALPHA, ALPHA1, QA, S, U, ZERO, FracBi, SparseMat, lift, qbracket, render, sp_scale

_TRANSFORMS = standard_transformations + (implicit_multiplication_application,)
_a = sympy.Symbol("a")


@lru_cache(maxsize=None)
def load_reference() -> dict:
    return json.loads(resources.files("linksgould").joinpath("data/reference_matrices.json").read_text())


# -- LaTeX cells -----------------------------------------------------------------------
def _exponent(tex: str) -> Tuple[Fraction, Fraction]:
    """q-exponent c0 + c1*alpha as (c0, c1)."""
    t = tex.replace("\\alpha", "a").replace(" ", "")
    t = re.sub(r"\\frac\{([^{}]*)\}\{([^{}]*)\}", r"((\1)/(\2))", t)
    e = sympy.expand(parse_expr(t, local_dict={"a": _a}, transformations=_TRANSFORMS))
    return Fraction(str(e.subs(_a, 0))), Fraction(str(e.coeff(_a)))


def _qpow_str(c0: Fraction, c1: Fraction) -> str:
    es, eu = 2 * c0, 2 * c1
    if es.denominator != 1 or eu.denominator != 1:
        raise ValueError(f"q-exponent {c0} + {c1} alpha is off the lattice")
    return f"(s**({int(es)})*u**({int(eu)}))"


def _eval_poly(p, syms) -> FracBi:
    s, u, ba, bb = syms
    vals = (S, U, qbracket(ALPHA), qbracket(ALPHA1))
    out = ZERO
    for monom, coeff in sympy.Poly(sympy.expand(p), s, u, ba, bb).terms():
        term = lift(int(coeff))
        for g, e in zip(vals, monom):
            term = term * g**e
        out = out + term
    return out


def cell_to_frac(cell: str) -> FracBi:
    t = cell.replace("\\times", " ").replace("\\,", " ")
    t = re.sub(r"\[\\alpha\s*\+\s*1\]_\{q\}", " BB ", t)
    t = re.sub(r"\[\\alpha\]_\{q\}", " BA ", t)

    def rep(m):
        body = m.group(1) if m.group(1) is not None else m.group(2)
        return " " + _qpow_str(*_exponent(body)) + " "

    t = re.sub(r"q\^\{((?:[^{}]|\{[^{}]*\})*)\}|q\^(\d+)", rep, t)
    t = re.sub(r"(?<![A-Za-z_])q(?![A-Za-z_])", " (s**2) ", t)
    t = t.replace("^{-1}", "**(-1)").replace("^", "**")
    syms = sympy.symbols("s u BA BB")
    expr = parse_expr(t, local_dict=dict(zip(("s", "u", "BA", "BB"), syms)), transformations=_TRANSFORMS)
    num, den = sympy.fraction(sympy.together(expr))
    return _eval_poly(num, syms) / _eval_poly(den, syms)


def cell_to_degree(cell: str) -> Optional[Tuple[str, Fraction]]:
    """Monomial z^k or t^k as (var, k); '1' is ('1', 0); '0' is None."""
    c = cell.strip()
    if c == "0":
        return None
    if c == "1":
        return ("1", Fraction(0))
    m = re.fullmatch(r"([zt])(?:\^\{?([-0-9/]+)\}?)?", c)
    if not m:
        raise ValueError(f"not a monomial cell: {cell!r}")
    return (m.group(1), Fraction(m.group(2) or 1))


# -- comparisons -------------------------------------------------------------------------
@dataclass(frozen=True)
class TableCheck:
    name: str
    ok: bool
    cells: int
    mismatch: Optional[Tuple[int, int]] = None
    expected: str = ""
    got: str = ""
    mismatches: int = 0

    def line(self) -> str:
        if self.ok:
            return f"pass  {self.name} ({self.cells} cells)"
        return (
            f"FAIL  {self.name}: {self.mismatches} of {self.cells} cells differ, first at {self.mismatch}: "
            f"expected {self.expected}, got {self.got}"
        )


def _grid(m: SparseMat, n: int) -> List[List[FracBi]]:
    return [[m.get((i, j), ZERO) for j in range(n)] for i in range(n)]


def _compare(name: str, cells: Sequence[Sequence[str]], got: List[List[FracBi]]) -> TableCheck:
    count, bad, first = 0, 0, None
    for i, row in enumerate(cells):
        for j, c in enumerate(row):
            count += 1
            if cell_to_frac(c) != got[i][j]:
                bad += 1
                first = first or ((i, j), c, render(got[i][j], "qqa"))
    if bad:
        return TableCheck(name, False, count, first[0], first[1], first[2], bad)
    return TableCheck(name, True, count)


def _compare_degrees(name: str, cells, got: List[List[Optional[Fraction]]], var: str) -> TableCheck:
    count, bad, first = 0, 0, None
    for i, row in enumerate(cells):
        for j, c in enumerate(row):
            count += 1
            want = cell_to_degree(c)
            have = got[i][j]
            ok = (want is None and have is None) or (
                want is not None and have is not None and want[1] == have and want[0] in (var, "1")
            )
            if not ok:
                bad += 1
                first = first or ((i, j), c, "0" if have is None else f"{var}^{have}")
    if bad:
        return TableCheck(name, False, count, first[0], first[1], first[2], bad)
    return TableCheck(name, True, count)


def check_tables() -> List[TableCheck]:
    ref = load_reference()
    v = reps.v_alpha()
    vd = reps.dual(v)
    big = reps.tensor(v, vd)
    pc = reps.caps_cups()
    out: List[TableCheck] = []
    for key, rep, n in (("pi", v, 4), ("pi_dual", vd, 4), ("Pi", big, 16)):
        for g, cells in ref[key].items():
            out.append(_compare(f"{key}[{g}]", cells, _grid(rep.matrix(g), n)))
    for g, cells in ref["Pi_diag"].items():
        m = big.matrix(g)
        out.append(_compare(f"Pi_diag[{g}]", [cells], [[m.get((i, i), ZERO) for i in range(16)]]))
    singles: Dict[str, SparseMat] = {
        "pi_g": reps.pivot(v),
        "pi_K": reps.ribbon_k(v),
        "Omega-": pc["Omega-"].matrix,
        "Omega- rescaled": sp_scale(pc["Omega-"].matrix, QA**2),
        "mho-": pc["mho-"].matrix,
        "mho- rescaled": sp_scale(pc["mho-"].matrix, QA**-2),
    }
    for name, m in singles.items():
        out.append(_compare(name, ref[name], _grid(m, 4)))
    for name, bc in (("A", basis.matrix_A()), ("Atilde", basis.matrix_Atilde())):
        out.append(_compare(name, ref[name]["cells"], bc.display()))
    for name, deg in basis.reductions().items():
        out.append(_compare_degrees(name, ref[name]["cells"], deg.display(), deg.var))
    return out
