"""Exact scalars for the U_q gl(2|1) computations.

Every scalar lives in Q(s, u) with s = q^{1/2} and u = q^{alpha/2}, so that all the
half powers appearing in the representation matrices have integer exponents.
Elements are stored as reduced fractions of integer polynomials (python-flint
``fmpz_mpoly``), which gives canonical forms and cheap equality.

Two sub-rings are exposed as predicates on the same type:

* ``is_ratq``   -- no dependence on u (the field Q(q^{1/2}))
* ``is_laurent`` -- a Laurent polynomial in u with coefficients in Q(s)

The Links-Gould variables are t0 = q^{-2 alpha} = u^-4 and t1 = q^{2 alpha} q^2 = u^4 s^4.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

import flint

CTX = flint.fmpz_mpoly_ctx.get(("s", "u"), "lex")
_S, _U = CTX.gens()
_ONE = CTX.from_dict({(0, 0): 1})
_ZERO = CTX.from_dict({})

Scalar = Union["FracBi", int, Fraction]


def _pd(p) -> Dict[Tuple[int, int], int]:
    return {(int(a), int(b)): int(c) for (a, b), c in p.to_dict().items()}


def _poly_from_dict(d: Mapping[Tuple[int, int], int]):
    return CTX.from_dict({k: v for k, v in d.items() if v})


class FracBi:
    """Reduced fraction num/den in Z[s, u]; den has positive leading coefficient."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=None, _reduced: bool = False):
        if den is None:
            den = _ONE
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                den = _ONE
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._key = None

    # -- constructors -------------------------------------------------------
    @staticmethod
    def lift(x: Scalar) -> "FracBi":
        if isinstance(x, FracBi):
            return x
        if isinstance(x, Fraction):
            return FracBi(CTX.from_dict({(0, 0): x.numerator}), CTX.from_dict({(0, 0): x.denominator}))
        if isinstance(x, int):
            return FracBi(CTX.from_dict({(0, 0): x}) if x else _ZERO, _ONE, True)
        raise TypeError(f"cannot lift {type(x).__name__} to FracBi")

    @staticmethod
    def monomial(es: int, eu: int, coeff: int = 1) -> "FracBi":
        """coeff * s^es * u^eu"""
        if coeff == 0:
            return ZERO
        n = CTX.from_dict({(max(es, 0), max(eu, 0)): coeff})
        d = CTX.from_dict({(max(-es, 0), max(-eu, 0)): 1})
        return FracBi(n, d, True)

    @staticmethod
    def from_terms(terms: Mapping[Tuple[int, int], int]) -> "FracBi":
        """Laurent polynomial from {(es, eu): coeff}."""
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        ms = min(k[0] for k in terms)
        mu = min(k[1] for k in terms)
        sh_s, sh_u = min(ms, 0), min(mu, 0)
        n = _poly_from_dict({(a - sh_s, b - sh_u): c for (a, b), c in terms.items()})
        d = CTX.from_dict({(-sh_s, -sh_u): 1})
        return FracBi(n, d)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other: Scalar) -> "FracBi":
        o = FracBi.lift(other)
        if self.den == o.den:
            return FracBi(self.num + o.num, self.den)
        return FracBi(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "FracBi":
        return FracBi(-self.num, self.den, True)

    def __sub__(self, other: Scalar) -> "FracBi":
        return self + (-FracBi.lift(other))

    def __rsub__(self, other: Scalar) -> "FracBi":
        return FracBi.lift(other) - self

    def __mul__(self, other: Scalar) -> "FracBi":
        o = FracBi.lift(other)
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        if self.den.is_one() and o.den.is_one():
            return FracBi(self.num * o.num, _ONE, True)
        return FracBi(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "FracBi":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FracBi(self.den, self.num)

    def __truediv__(self, other: Scalar) -> "FracBi":
        return self * FracBi.lift(other).inv()

    def __rtruediv__(self, other: Scalar) -> "FracBi":
        return FracBi.lift(other) * self.inv()

    def __pow__(self, k: int) -> "FracBi":
        if k < 0:
            return self.inv() ** (-k)
        return FracBi(self.num ** k, self.den ** k, True)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = FracBi.lift(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._key is None:
            self._key = hash((tuple(sorted(_pd(self.num).items())), tuple(sorted(_pd(self.den).items()))))
        return self._key

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- structure ------------------------------------------------------------
    def u_support(self) -> set:
        """u-exponents occurring in numerator or denominator."""
        return {k[1] for k in _pd(self.num)} | {k[1] for k in _pd(self.den)}

    def is_ratq(self) -> bool:
        return self.u_support() <= {0}

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial in u times a polynomial in s."""
        return len({k[1] for k in _pd(self.den)}) == 1

    def is_laurent_su(self) -> bool:
        return len(_pd(self.den)) == 1

    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        """Laurent expansion {(es, eu): coeff}; requires a monomial denominator."""
        dd = _pd(self.den)
        if len(dd) != 1:
            raise ValueError("not a Laurent polynomial in s and u")
        ((ds, du), dc), = dd.items()
        return {(a - ds, b - du): Fraction(int(c), int(dc)) for (a, b), c in _pd(self.num).items()}

    def u_coefficients(self) -> Dict[int, "FracBi"]:
        """View as a LaurentBi: {u-exponent: RatQ coefficient}."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial in u")
        dd = _pd(self.den)
        du = next(iter(dd))[1]
        dens = _poly_from_dict({(k[0], 0): v for k, v in dd.items()})
        out: Dict[int, Dict[Tuple[int, int], int]] = {}
        for (a, b), c in _pd(self.num).items():
            out.setdefault(b - du, {})[(a, 0)] = int(c)
        return {e: FracBi(_poly_from_dict(t), dens) for e, t in out.items()}

    def evaluate(self, s0: Fraction, u0: Fraction) -> Fraction:
        """Exact value at a rational point."""
        n = _eval_poly(self.num, s0, u0)
        d = _eval_poly(self.den, s0, u0)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return n / d

    def eval_mod(self, s0: int, u0: int, p: int) -> int:
        n = _eval_poly_mod(self.num, s0, u0, p)
        d = _eval_poly_mod(self.den, s0, u0, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes mod p")
        return n * pow(d, -1, p) % p

    def subs_su(self, s_val: "FracBi", u_val: "FracBi") -> "FracBi":
        """Substitute s -> s_val, u -> u_val (both FracBi)."""
        return _subs_poly(self.num, s_val, u_val) / _subs_poly(self.den, s_val, u_val)

    def __repr__(self) -> str:
        return render(self, "su")

    __str__ = __repr__


def _eval_poly(p, s0: Fraction, u0: Fraction) -> Fraction:
    tot = Fraction(0)
    for (a, b), c in _pd(p).items():
        tot += int(c) * s0 ** a * u0 ** b
    return tot


def _eval_poly_mod(p, s0: int, u0: int, m: int) -> int:
    tot = 0
    for (a, b), c in _pd(p).items():
        tot += int(c) * pow(s0, a, m) * pow(u0, b, m)
    return tot % m


def _subs_poly(p, s_val: FracBi, u_val: FracBi) -> FracBi:
    tot = ZERO
    for (a, b), c in _pd(p).items():
        tot = tot + int(c) * s_val ** a * u_val ** b
    return tot


ZERO = FracBi(_ZERO, _ONE, True)
ONE = FracBi(_ONE, _ONE, True)
S = FracBi(_S, _ONE, True)
U = FracBi(_U, _ONE, True)
Q = S ** 2
QA = U ** 2  # q^alpha


def lift(x: Scalar) -> FracBi:
    return FracBi.lift(x)


def mono(es: int, eu: int, coeff: int = 1) -> FracBi:
    return FracBi.monomial(es, eu, coeff)


def qpow(n: Fraction | int = 0, alpha: Fraction | int = 0) -> FracBi:
    """q^{n + alpha*a}; n and alpha may be half-integers."""
    es, eu = Fraction(n) * 2, Fraction(alpha) * 2
    if es.denominator != 1 or eu.denominator != 1:
        raise ValueError("exponent must be a half-integer")
    return mono(int(es), int(eu))


@dataclass(frozen=True)
class QExp:
    """Symbolic exponent alpha_coeff * alpha + const."""

    const: int = 0
    alpha: int = 0


def qbracket(x: Union[int, QExp]) -> FracBi:
    """[x]_q = (q^x - q^-x) / (q - q^-1)."""
    if isinstance(x, int):
        x = QExp(x, 0)
    top = qpow(x.const, x.alpha) - qpow(-x.const, -x.alpha)
    return top / (Q - Q.inv())


ALPHA = QExp(0, 1)
ALPHA1 = QExp(1, 1)


# -- degrees -------------------------------------------------------------------
NEG_INF = float("-inf")


def _max_u(p) -> int:
    return max(k[1] for k in _pd(p))


def _min_u(p) -> int:
    return min(k[1] for k in _pd(p))


def deg_z(x: FracBi) -> Union[Fraction, float]:
    """Leading degree in z = q^alpha of the Laurent expansion at z = infinity."""
    if x.is_zero():
        return NEG_INF
    return Fraction(_max_u(x.num) - _max_u(x.den), 2)


def deg_t(x: FracBi) -> Union[Fraction, float]:
    """Leading degree in t = q^-alpha of the Laurent expansion at z = 0."""
    if x.is_zero():
        return NEG_INF
    return Fraction(-(_min_u(x.num) - _min_u(x.den)), 2)


def span_q2alpha(x: FracBi) -> Fraction:
    """Breadth in q^{2 alpha}; equals the (t0, t1) span."""
    if x.is_zero():
        raise ValueError("zero polynomial has no span")
    if not x.is_laurent():
        raise ValueError("span is defined for Laurent polynomials in u")
    us = list(x.u_coefficients())
    return Fraction(max(us) - min(us), 4)


# -- (t0, t1) lattice --------------------------------------------------------------
class OffLattice(ValueError):
    def __init__(self, p: int, r: int):
        super().__init__(f"monomial s^{r} u^{p} is off the (t0, t1) lattice")
        self.p, self.r = p, r


@dataclass(frozen=True)
class T0T1Poly:
    """Integer Laurent polynomial sum c * t0^a * t1^b, stored as {(a, b): c}."""

    terms: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in sorted(self.terms.items()) if v})

    def embed(self) -> FracBi:
        return FracBi.from_terms({(4 * b, 4 * (b - a)): c for (a, b), c in self.terms.items()})

    def specialize(self, rule: str) -> "ULaurent":
        """rule 'inv' : t1 := t0^-1 ; rule 'neginv' : t1 := -t0^-1."""
        if rule not in ("inv", "neginv"):
            raise ValueError(f"unknown specialization {rule!r}")
        out: Dict[int, int] = {}
        for (a, b), c in self.terms.items():
            sign = -1 if (rule == "neginv" and b % 2) else 1
            out[a - b] = out.get(a - b, 0) + sign * c
        return ULaurent(out)

    def span(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no span")
        d = [a - b for a, b in self.terms]
        return max(d) - min(d)

    def __str__(self) -> str:
        return _render_t0t1(self)

    def __bool__(self) -> bool:
        return bool(self.terms)


def to_t0t1(x: FracBi) -> T0T1Poly:
    if x.is_zero():
        return T0T1Poly({})
    if not x.is_laurent_su():
        raise ValueError("value is not a Laurent polynomial in s and u")
    out: Dict[Tuple[int, int], int] = {}
    for (r, p), c in x.terms().items():
        if r % 4 or p % 4:
            raise OffLattice(p, r)
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c}")
        b = r // 4
        a = b - p // 4
        out[(a, b)] = int(c)
    return T0T1Poly(out)


@dataclass(frozen=True)
class ULaurent:
    """Univariate integer Laurent polynomial {exponent: coeff}."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(self.coeffs.items()) if v})

    @staticmethod
    def const(c: int) -> "ULaurent":
        return ULaurent({0: c})

    def __add__(self, o: "ULaurent") -> "ULaurent":
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, 0) + v
        return ULaurent(out)

    def __neg__(self) -> "ULaurent":
        return ULaurent({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, o: "ULaurent") -> "ULaurent":
        return self + (-o)

    def __mul__(self, o: "ULaurent") -> "ULaurent":
        out: Dict[int, int] = {}
        for a, x in self.coeffs.items():
            for b, y in o.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return ULaurent(out)

    def substitute_power(self, k: int) -> "ULaurent":
        """t -> t^k"""
        return ULaurent({e * k: c for e, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def breadth(self) -> int:
        if not self.coeffs:
            return 0
        return max(self.coeffs) - min(self.coeffs)

    def normalized(self) -> "ULaurent":
        """Shift to be centred (lowest exponent = -highest when possible) with positive lead."""
        if not self.coeffs:
            return self
        lo, hi = min(self.coeffs), max(self.coeffs)
        if (lo + hi) % 2:
            shift = -lo
        else:
            shift = -(lo + hi) // 2
        sign = 1 if self.coeffs[hi] > 0 else -1
        return ULaurent({e + shift: sign * c for e, c in self.coeffs.items()})

    def equal_up_to_unit(self, o: "ULaurent") -> bool:
        return self.normalized() == o.normalized()

    def __str__(self) -> str:
        return _render_univariate(self.coeffs, "t")


# -- rendering ----------------------------------------------------------------
def _fmt_exp(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _join(parts: Iterable[Tuple[int, str]], mul: str = "") -> str:
    """parts: (coefficient, monomial string or '')"""
    out = []
    for c, m in parts:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if a != 1 and m:
            body = f"{a}{mul}{m}"
        else:
            body = m or str(a)
        out.append((sign, body))
    if not out:
        return "0"
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def _render_univariate(coeffs: Mapping[int, int], var: str) -> str:
    parts = []
    for e in sorted(coeffs):
        m = "" if e == 0 else (var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})")
        parts.append((coeffs[e], m))
    return _join(parts, "*")


def _render_t0t1(p: T0T1Poly) -> str:
    parts = []
    for (a, b), c in sorted(p.terms.items(), key=lambda kv: (kv[0][0] - kv[0][1], kv[0])):
        ms = []
        for v, e in (("t0", a), ("t1", b)):
            if e == 1:
                ms.append(v)
            elif e:
                ms.append(f"{v}^{e}" if e > 0 else f"{v}^({e})")
        parts.append((c, "*".join(ms)))
    return _join(parts, "*")


def _qmono(e: Fraction, alpha: bool = False) -> str:
    if e == 0:
        return ""
    if alpha:
        if e == 1:
            return "q^{α}"
        return f"q^{{{_fmt_exp(e)}α}}"
    return "q" if e == 1 else f"q^{{{_fmt_exp(e)}}}"


def _render_qqa(x: FracBi) -> str:
    if x.is_zero():
        return "0"
    if not x.is_laurent_su():
        return f"({_render_qqa(FracBi(x.num))})/({_render_qqa(FracBi(x.den))})"
    groups: Dict[Fraction, Dict[Fraction, Fraction]] = {}
    for (r, p), c in x.terms().items():
        groups.setdefault(Fraction(p, 2), {})[Fraction(r, 2)] = c
    chunks = []
    for ae in sorted(groups):
        inner = groups[ae]
        if any(c.denominator != 1 for c in inner.values()):
            raise ValueError("rational coefficients are not rendered in qqa style")
        body = _join((int(inner[qe]), _qmono(qe)) for qe in sorted(inner))
        prefix = _qmono(ae, alpha=True)
        if not prefix:
            chunks.append((body, len(inner) > 1))
        elif len(inner) == 1 and int(next(iter(inner.values()))) in (1, -1) and next(iter(inner)) == 0:
            chunks.append(("-" + prefix if int(next(iter(inner.values()))) < 0 else prefix, False))
        else:
            chunks.append((f"{prefix}({body})", False))
    out = ""
    for i, (body, paren) in enumerate(chunks):
        text = f"({body})" if paren and len(chunks) > 1 else body
        if i == 0:
            out = text
        elif text.startswith("-"):
            out += " - " + text[1:]
        else:
            out += " + " + text
    return out


def _render_su(x: FracBi) -> str:
    n = str(x.num)
    if x.den.is_one():
        return n
    return f"({n})/({x.den})"


STYLES = ("qqa", "t0t1", "su")


def render(x: FracBi, style: str = "su") -> str:
    if style == "su":
        return _render_su(x)
    if style == "qqa":
        return _render_qqa(x)
    if style == "t0t1":
        return str(to_t0t1(x))
    raise ValueError(f"unknown style {style!r}")


# -- parsing ------------------------------------------------------------------
class ParseError(ValueError):
    pass


def _sympy_to_frac(expr, sym_s, sym_u) -> FracBi:
    import sympy as sp

    expr = sp.together(sp.expand(expr))
    n, d = sp.fraction(expr)

    def conv(e) -> FracBi:
        e = sp.expand(e)
        terms: Dict[Tuple[int, int], Fraction] = {}
        for term in sp.Add.make_args(e):
            c, rest = term.as_coeff_Mul()
            pw = rest.as_powers_dict() if rest != 1 else {}
            es = pw.get(sym_s, 0)
            eu = pw.get(sym_u, 0)
            extra = set(pw) - {sym_s, sym_u}
            if extra or not (sp.Integer(es) == es and sp.Integer(eu) == eu):
                raise ParseError(f"unsupported term {term}")
            key = (int(es), int(eu))
            terms[key] = terms.get(key, Fraction(0)) + Fraction(int(sp.numer(c)), int(sp.denom(c)))
        den = reduce(lambda a, b: a * b // _gcd(a, b), (v.denominator for v in terms.values()), 1)
        out = FracBi.from_terms({k: int(v * den) for k, v in terms.items()})
        return out / den

    return conv(n) / conv(d)


def _gcd(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


_ALPHA_RE = re.compile(r"q\^\{([^{}]*?)(?:α|a|alpha)\}")
_QEXP_RE = re.compile(r"q\^\{([^{}]*)\}")


def parse(text: str, style: str = "su") -> FracBi:
    """Inverse of ``render`` for all three styles."""
    import sympy as sp
    from sympy.parsing.sympy_parser import (
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    s, u = sp.symbols("s u")
    src = text.strip()
    try:
        if style == "su":
            expr = parse_expr(src.replace("^", "**"), local_dict={"s": s, "u": u})
        elif style == "t0t1":
            t0, t1 = sp.symbols("t0 t1")
            expr = parse_expr(src.replace("^", "**"), local_dict={"t0": t0, "t1": t1})
            expr = expr.subs({t0: u ** -4, t1: u ** 4 * s ** 4})
        elif style == "qqa":
            def alpha_sub(m: re.Match) -> str:
                coeff = m.group(1).strip()
                if coeff in ("", "+"):
                    coeff = "1"
                elif coeff == "-":
                    coeff = "-1"
                return f"(u**(2*({coeff})))"

            body = _ALPHA_RE.sub(alpha_sub, src)
            body = _QEXP_RE.sub(lambda m: f"(s**(2*({m.group(1)})))", body)
            body = re.sub(r"(?<![A-Za-z_])q(?![A-Za-z_])", "(s**2)", body)
            tr = standard_transformations + (implicit_multiplication_application,)
            expr = parse_expr(body.replace("^", "**"), local_dict={"s": s, "u": u}, transformations=tr)
        else:
            raise ParseError(f"unknown style {style!r}")
    except ParseError:
        raise
    except Exception as exc:  # sympy raises a zoo of exception types
        raise ParseError(f"cannot parse {text!r}: {exc}") from exc
    return _sympy_to_frac(expr, s, u)


# -- matrices ---------------------------------------------------------------------
SparseMat = Dict[Tuple[int, int], FracBi]


def sp_mul(a: SparseMat, b: SparseMat) -> SparseMat:
    cols: Dict[int, list] = {}
    for (k, j), v in b.items():
        cols.setdefault(k, []).append((j, v))
    out: Dict[Tuple[int, int], FracBi] = {}
    for (i, k), x in a.items():
        for j, y in cols.get(k, ()):
            key = (i, j)
            out[key] = out[key] + x * y if key in out else x * y
    return {k: v for k, v in out.items() if v}


def sp_add(a: SparseMat, b: SparseMat, c: Scalar = 1) -> SparseMat:
    c = lift(c)
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + c * v if k in out else c * v
    return {k: v for k, v in out.items() if v}


def sp_scale(a: SparseMat, c: Scalar) -> SparseMat:
    c = lift(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def sp_eye(n: int) -> SparseMat:
    return {(i, i): ONE for i in range(n)}


def sp_kron(a: SparseMat, b: SparseMat, nb: int, nbc: int | None = None) -> SparseMat:
    """Kronecker product; b has nb rows and nbc (default nb) columns."""
    nbc = nb if nbc is None else nbc
    return {(i1 * nb + i2, j1 * nbc + j2): x * y for (i1, j1), x in a.items() for (i2, j2), y in b.items()}


def sp_transpose(a: SparseMat) -> SparseMat:
    return {(j, i): v for (i, j), v in a.items()}


def sp_diag(vals: Iterable[Scalar]) -> SparseMat:
    return {(i, i): lift(v) for i, v in enumerate(vals) if lift(v)}


def sp_dense(a: SparseMat, n: int, m: int | None = None) -> list:
    m = n if m is None else m
    out = [[ZERO] * m for _ in range(n)]
    for (i, j), v in a.items():
        out[i][j] = v
    return out


def sp_inverse(a: SparseMat, n: int) -> SparseMat:
    """Gauss-Jordan inverse over Q(s, u)."""
    rows = [dict() for _ in range(n)]
    for (i, j), v in a.items():
        rows[i][j] = v
    inv = [{i: ONE} for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if col in rows[r]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = rows[col][col].inv()
        rows[col] = {k: v * p for k, v in rows[col].items()}
        inv[col] = {k: v * p for k, v in inv[col].items()}
        for r in range(n):
            if r != col and col in rows[r]:
                f = rows[r][col]
                for k, v in rows[col].items():
                    nv = rows[r].get(k, ZERO) - f * v
                    if nv:
                        rows[r][k] = nv
                    else:
                        rows[r].pop(k, None)
                for k, v in inv[col].items():
                    nv = inv[r].get(k, ZERO) - f * v
                    if nv:
                        inv[r][k] = nv
                    else:
                        inv[r].pop(k, None)
    return {(i, j): v for i in range(n) for j, v in inv[i].items()}


def nullspace(rows: Iterable[Mapping[int, FracBi]], ncols: int) -> list:
    """Basis of the kernel of a sparse row system, via reduced row echelon form."""
    pivots: Dict[int, Dict[int, FracBi]] = {}
    for r in rows:
        r = {k: v for k, v in r.items() if v}
        for p, pr in pivots.items():
            if p in r:
                f = r[p]
                for k, v in pr.items():
                    nv = r.get(k, ZERO) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        if not r:
            continue
        p = min(r)
        c = r[p].inv()
        r = {k: v * c for k, v in r.items()}
        for pp, pr in pivots.items():
            if p in pr:
                f = pr[p]
                for k, v in r.items():
                    nv = pr.get(k, ZERO) - f * v
                    if nv:
                        pr[k] = nv
                    else:
                        pr.pop(k, None)
        pivots[p] = r
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = {f: ONE}
        for p, pr in pivots.items():
            if f in pr:
                vec[p] = -pr[f]
        basis.append(vec)
    return basis


def iter_nonzero(m: SparseMat) -> Iterator[Tuple[Tuple[int, int], FracBi]]:
    return iter(sorted(m.items()))
