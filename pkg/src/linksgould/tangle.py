"""Diagram models and the Reshetikhin-Turaev evaluation engine for LG.

Operators act bottom to top.  A strand coloured "V" is oriented upward and
carries V_alpha; "V*" is oriented downward and carries its dual.  States are
tuples of basis indices, one per strand, and every engine propagates sparse
dicts of states.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import flint

from . import basis, reps, rmatrix
from .ring import (
    CTX,
    ONE,
    QA,
    ZERO,
    FracBi,
    OffLattice,
    SparseMat,
    T0T1Poly,
    deg_t,
    deg_z,
    lift,
    render,
    sp_inverse,
    sp_scale,
    span_q2alpha,
    to_t0t1,
)

DIM = 4
DEFAULT_MAX_STRANDS = 8
COLORS = ("V", "V*")
COLOR_ALIASES = {"V": "V", "V↓": "V", "v": "V", "V*": "V*", "V↑": "V*", "v*": "V*"}
CAPS = {"Omega+": ("V*", "V"), "mho-": ("V", "V*")}
CUPS = {"mho+": ("V", "V*"), "Omega-": ("V*", "V")}

State = Tuple[int, ...]
Vector = Dict[State, FracBi]


class SchurFailure(ArithmeticError):
    """The closed braid or tangle is not a scalar multiple of the identity."""


class ProgramError(ValueError):
    pass


class InvariantViolation(ArithmeticError):
    """A coefficient or degree statement that must hold failed."""


# -- LG values --------------------------------------------------------------------
@dataclass(frozen=True)
class LGValue:
    value: FracBi

    @property
    def t0t1(self) -> Optional[T0T1Poly]:
        try:
            return to_t0t1(self.value)
        except (OffLattice, ValueError):
            return None

    def render(self, style: str = "qqa") -> str:
        if style == "t0t1":
            p = self.t0t1
            if p is None:
                raise OffLattice(0, 0)
            return str(p)
        return render(self.value, style)

    @property
    def span(self) -> Optional[Fraction]:
        return None if self.value.is_zero() else span_q2alpha(self.value)

    @property
    def dz(self):
        return deg_z(self.value)

    @property
    def dt(self):
        return deg_t(self.value)

    def to_dict(self) -> dict:
        from . import topo

        p = self.t0t1
        zero = self.value.is_zero()
        return {
            "lg_qqa": render(self.value, "qqa"),
            "lg_t0t1": None if p is None else str(p),
            "span": None if zero else str(self.span),
            "genus_lower_bound": None if zero else topo.genus_lower_bound(self.value),
            "dz": None if zero else str(self.dz),
            "dt": None if zero else str(self.dt),
        }


# -- braid words ----------------------------------------------------------------
@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) > self.strands - 1:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    @staticmethod
    def from_json(text: str) -> "BraidWord":
        d = json.loads(text) if isinstance(text, str) else text
        return BraidWord(int(d["strands"]), tuple(d["word"]))

    def to_json(self) -> str:
        return json.dumps({"strands": self.strands, "word": list(self.word)})

    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.word)

    def permutation(self) -> Tuple[int, ...]:
        perm = list(range(self.strands))
        for g in self.word:
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def components(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for i in range(self.strands):
            if i in seen:
                continue
            count += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
        return count

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in self.word))


# -- scalar backends for braid closure -------------------------------------------
@dataclass(frozen=True)
class _Table:
    """Crossing columns: input pair -> list of (output pair, value)."""

    pos: Mapping[Tuple[int, int], Tuple[Tuple[Tuple[int, int], object], ...]]
    neg: Mapping[Tuple[int, int], Tuple[Tuple[Tuple[int, int], object], ...]]
    k: Tuple[object, ...]


def _columns(m: SparseMat, conv: Callable) -> Dict[Tuple[int, int], tuple]:
    cols: Dict[Tuple[int, int], list] = {}
    for (i, j), v in m.items():
        cols.setdefault(divmod(j, DIM), []).append((divmod(i, DIM), conv(v)))
    return {k: tuple(v) for k, v in cols.items()}


def _shift_of(values: Iterable[FracBi]) -> Tuple[int, int]:
    """Smallest (a, b) with s^a u^b * x a polynomial for every x (denominators are monomials)."""
    a = b = 0
    for x in values:
        (es, eu), = x.den.monoms() if len(x.den.monoms()) == 1 else [(None, None)]
        if es is None:
            raise ArithmeticError("braiding entry is not a Laurent polynomial")
        a, b = max(a, es), max(b, eu)
    return a, b


def _mono(es: int, eu: int):
    return CTX.from_dict({(es, eu): 1})


@lru_cache(maxsize=None)
def _poly_table():
    """Braiding and K with monomial denominators cleared; returns (table, shifts)."""
    br = rmatrix.braiding()
    kd = rmatrix.k_diagonal()
    sr = _shift_of(list(br.R.values()) + list(br.R_inv.values()))
    sk = _shift_of(kd)

    def conv_r(x: FracBi):
        return (x * FracBi(_mono(*sr))).num

    def conv_k(x: FracBi):
        return (x * FracBi(_mono(*sk))).num

    table = _Table(_columns(br.R, conv_r), _columns(br.R_inv, conv_r), tuple(conv_k(x) for x in kd))
    return table, sr, sk


def _propagate(start: State, word: Sequence[int], table: _Table, add, mul, zero_test) -> Dict[State, object]:
    st = {start: None}
    first = True
    for g in word:
        i = abs(g) - 1
        cols = table.pos if g > 0 else table.neg
        new: Dict[State, object] = {}
        for idx, v in st.items():
            for (a, b), r in cols.get((idx[i], idx[i + 1]), ()):
                key = idx[:i] + (a, b) + idx[i + 2 :]
                val = r if first else mul(v, r)
                new[key] = add(new[key], val) if key in new else val
        st = {k: v for k, v in new.items() if not zero_test(v)}
        first = False
    return st


def _weight(state: State) -> Tuple[int, ...]:
    """Weight of a tensor basis state (counts of each index), conserved by the braiding."""
    return tuple(sorted(state))


def _closure_matrix(word: Sequence[int], n: int, table: _Table, one, add, mul, zero_test) -> Dict[Tuple[int, int], object]:
    """M[j', j] = sum_x K(x) <x j'| rho |x j>, strands 1..n-1 closed, strand n open."""
    out: Dict[Tuple[int, int], object] = {}
    for x in itertools.product(range(DIM), repeat=n - 1):
        w = one
        for xi in x:
            w = mul(w, table.k[xi])
        for j in range(DIM):
            start = x + (j,)
            if not word:
                res = {start: one}
            else:
                res = _propagate(start, word, table, add, mul, zero_test)
            for jp in range(DIM):
                v = res.get(x + (jp,))
                if v is None:
                    continue
                v = mul(w, v)
                out[(jp, j)] = add(out[(jp, j)], v) if (jp, j) in out else v
    return {k: v for k, v in out.items() if not zero_test(v)}


def _scalar_of(m: Dict[Tuple[int, int], object], eq) -> object:
    c = m.get((0, 0))
    for (a, b), v in m.items():
        if a != b:
            raise SchurFailure(f"Schur failure: off-diagonal residue at {(a, b)}")
    for j in range(DIM):
        v = m.get((j, j))
        if not eq(v, c):
            raise SchurFailure(f"Schur failure: diagonal entries differ at {j}")
    return c


def _lg_exact(b: BraidWord) -> FracBi:
    table, (ra, rb), (ka, kb) = _poly_table()
    n = b.strands
    one = CTX.from_dict({(0, 0): 1})
    m = _closure_matrix(b.word, n, table, one, lambda x, y: x + y, lambda x, y: x * y, lambda v: v.is_zero())
    c = _scalar_of(m, lambda x, y: (x is None and y is None) or (x is not None and y is not None and x == y))
    if c is None:
        return ZERO
    sa = ra * len(b.word) + ka * (n - 1)
    sb = rb * len(b.word) + kb * (n - 1)
    return FracBi(c, _mono(sa, sb))


# -- evaluation homomorphism mode ----------------------------------------------------
PRIMES = (2**61 - 1, 2**31 - 1)


def _laurent_mod(x: FracBi, s0: int, u0: int, p: int) -> int:
    return x.eval_mod(s0, u0, p)


def _mod_table(s0: int, u0: int, p: int) -> _Table:
    br = rmatrix.braiding()

    def conv(v):
        return _laurent_mod(v, s0, u0, p)

    return _Table(_columns(br.R, conv), _columns(br.R_inv, conv), tuple(conv(x) for x in rmatrix.k_diagonal()))


def _lg_mod(b: BraidWord, s0: int, u0: int, p: int, schur: bool = False) -> int:
    table = _mod_table(s0, u0, p)
    m = _closure_matrix(
        b.word, b.strands, table, 1, lambda x, y: (x + y) % p, lambda x, y: (x * y) % p, lambda v: v == 0
    )
    if schur:
        c = _scalar_of(m, lambda x, y: (x or 0) == (y or 0))
    else:
        c = m.get((0, 0))
    return c or 0


def _degree_box(b: BraidWord) -> Tuple[int, int, int, int]:
    """Bounds smin, smax, umin, umax on the exponents of LG from entrywise degrees."""

    def ext(values):
        es = [e[0] - x.den.monoms()[0][0] for x in values for e in x.num.monoms()]
        eu = [e[1] - x.den.monoms()[0][1] for x in values for e in x.num.monoms()]
        return min(es), max(es), min(eu), max(eu)

    br = rmatrix.braiding()
    r = ext(br.R.values())
    ri = ext(br.R_inv.values())
    k = ext(rmatrix.k_diagonal())
    out = [0, 0, 0, 0]
    for g in b.word:
        e = r if g > 0 else ri
        for t in range(4):
            out[t] += e[t]
    for _ in range(b.strands - 1):
        for t in range(4):
            out[t] += k[t]
    return tuple(out)


def _interp_1d(xs: Sequence[int], ys: Sequence[int], p: int) -> List[int]:
    """Coefficients (low to high) of the polynomial through the points, mod p."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], -1, p) % p
    poly = [0] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [0] * n
        for k in range(n - 1):
            new[k + 1] = (new[k + 1] + poly[k]) % p
        for k in range(n):
            new[k] = (new[k] - xs[i] * poly[k]) % p
        new[0] = (new[0] + coef[i]) % p
        poly = new
    return poly


def _sym(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def _lg_interp(b: BraidWord, seed: int = 1) -> FracBi:
    """Reconstruct LG from values mod a prime on the (s^4, u^4) lattice, then verify mod a second prime."""
    p = PRIMES[0]
    smin, smax, umin, umax = _degree_box(b)
    # LG = sum c s^{4i} u^{4j}; shift exponents to a nonnegative box
    i0, i1 = -((-smin) // 4) if smin < 0 else smin // 4, smax // 4
    j0, j1 = -((-umin) // 4) if umin < 0 else umin // 4, umax // 4
    i0, j0 = smin // 4 if smin % 4 == 0 else (smin // 4) + 1, umin // 4 if umin % 4 == 0 else (umin // 4) + 1
    nx, ny = i1 - i0 + 1, j1 - j0 + 1
    rng = random.Random(seed)
    sig = _distinct_fourth_roots(nx, p, rng)
    tau = _distinct_fourth_roots(ny, p, rng)
    grid = []
    for s0 in sig:
        row = []
        for u0 in tau:
            v = _lg_mod(b, s0, u0, p)
            row.append(v * pow(s0, -4 * i0, p) * pow(u0, -4 * j0, p) % p)
        grid.append(row)
    ys = [pow(u0, 4, p) for u0 in tau]
    xs = [pow(s0, 4, p) for s0 in sig]
    in_u = [_interp_1d(ys, row, p) for row in grid]
    terms: Dict[Tuple[int, int], int] = {}
    for j in range(ny):
        cx = _interp_1d(xs, [in_u[i][j] for i in range(nx)], p)
        for i, c in enumerate(cx):
            c = _sym(c, p)
            if c:
                terms[(4 * (i + i0), 4 * (j + j0))] = c
    val = FracBi.from_terms(terms)
    q = PRIMES[1]
    for _ in range(2):
        s0, u0 = rng.randrange(2, q - 1), rng.randrange(2, q - 1)
        if val.eval_mod(s0, u0, q) != _lg_mod(b, s0, u0, q, schur=True):
            raise ArithmeticError("interpolated LG fails verification at a random point")
    return val


def _distinct_fourth_roots(n: int, p: int, rng: random.Random) -> List[int]:
    out, seen = [], set()
    while len(out) < n:
        x = rng.randrange(2, p - 1)
        x4 = pow(x, 4, p)
        if x4 in seen:
            continue
        seen.add(x4)
        out.append(x)
    return out


def lg_from_braid(b: BraidWord, mode: str = "exact", max_strands: int = DEFAULT_MAX_STRANDS) -> LGValue:
    """LG of the closure: pi(K)-weighted trace over strands 1..n-1, scalar read on strand n."""
    if mode not in ("exact", "interp"):
        raise ValueError(f"unknown mode {mode!r}")
    if b.strands == 1:
        return LGValue(ONE)
    if not b.word:
        # identity braid: each closed strand contributes the quantum dimension
        return LGValue(reps.quantum_dimension() ** (b.strands - 1))
    if mode == "exact":
        if b.strands > max_strands:
            raise ValueError(f"{b.strands} strands exceeds the exact-mode ceiling {max_strands}; use interp mode")
        return LGValue(_lg_exact(b))
    return LGValue(_lg_interp(b))


def closure_by_caps(b: BraidWord) -> FracBi:
    """The same closure through explicit cups and caps in a tangle program, for cross-checking."""
    n = b.strands
    slices: List[Slice] = []
    src: Tuple[str, ...] = ("V",)
    # nested cups Omega- : C -> V* V; the word becomes V*^(n-1) V^(n-1) V
    for k in range(n - 1):
        slices.append(Slice("cup", k, "Omega-"))
    off = n - 1
    for g in b.word:
        slices.append(Slice("X+" if g > 0 else "X-", off + abs(g) - 1))
    for k in range(n - 1):
        slices.append(Slice("cap", n - 2 - k, "Omega+"))
    prog = TangleProgram(src, tuple(slices))
    m = eval_program(prog)
    c = m.get((0, 0), ZERO)
    for j in range(DIM):
        if m.get((j, j), ZERO) != c:
            raise SchurFailure("Schur failure in cap closure")
    return c


# -- tangle programs ----------------------------------------------------------------
@dataclass(frozen=True)
class Slice:
    """One elementary morphism: op in {id, X+, X-, cap, cup} at strand position pos."""

    op: str
    pos: int = 0
    name: str = ""

    def to_dict(self) -> dict:
        d = {"op": self.op, "pos": self.pos}
        if self.name:
            d["name"] = self.name
        return d


def _norm_colors(word: Iterable[str]) -> Tuple[str, ...]:
    out = []
    for c in word:
        if c not in COLOR_ALIASES:
            raise ProgramError(f"unknown color {c!r}")
        out.append(COLOR_ALIASES[c])
    return tuple(out)


def apply_word(word: Tuple[str, ...], s: Slice) -> Tuple[str, ...]:
    """Target word of a slice, validating its source."""
    p = s.pos
    if s.op == "id":
        return word
    if s.op in ("X+", "X-"):
        if not 0 <= p < len(word) - 1:
            raise ProgramError(f"crossing at {p} outside word of length {len(word)}")
        return word[:p] + (word[p + 1], word[p]) + word[p + 2 :]
    if s.op == "cap":
        if s.name not in CAPS:
            raise ProgramError(f"unknown cap {s.name!r}")
        if word[p : p + 2] != CAPS[s.name]:
            raise ProgramError(f"cap {s.name} expects {CAPS[s.name]} at {p}, found {word[p:p + 2]}")
        return word[:p] + word[p + 2 :]
    if s.op == "cup":
        if s.name not in CUPS:
            raise ProgramError(f"unknown cup {s.name!r}")
        if not 0 <= p <= len(word):
            raise ProgramError(f"cup at {p} outside word of length {len(word)}")
        return word[:p] + CUPS[s.name] + word[p:]
    raise ProgramError(f"unknown op {s.op!r}")


@dataclass(frozen=True)
class TangleProgram:
    source: Tuple[str, ...]
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "source", _norm_colors(self.source))
        self.words()

    def words(self) -> List[Tuple[str, ...]]:
        out = [self.source]
        for s in self.slices:
            out.append(apply_word(out[-1], s))
        return out

    @property
    def target(self) -> Tuple[str, ...]:
        return self.words()[-1]

    def compose(self, after: "TangleProgram") -> "TangleProgram":
        """self then after; the target of self must be the source of after."""
        if self.target != after.source:
            raise ProgramError(f"non-composable: {self.target} then {after.source}")
        return TangleProgram(self.source, self.slices + after.slices)

    def to_json(self) -> str:
        return json.dumps({"source": list(self.source), "slices": [s.to_dict() for s in self.slices]})

    @staticmethod
    def from_json(text) -> "TangleProgram":
        d = json.loads(text) if isinstance(text, str) else text
        slices = tuple(Slice(x["op"], int(x.get("pos", 0)), x.get("name", "")) for x in d["slices"])
        return TangleProgram(tuple(d["source"]), slices)


@lru_cache(maxsize=None)
def _crossing_columns() -> Dict[Tuple[str, str, int], Dict[Tuple[int, int], tuple]]:
    return {k: _columns(m, lambda v: v) for k, m in rmatrix.rotated_crossings().items()}


@lru_cache(maxsize=None)
def _pairings() -> Dict[str, Tuple[FracBi, ...]]:
    return {name: p.weights for name, p in reps.caps_cups().items()}


def apply_slice(vec: Vector, word: Tuple[str, ...], s: Slice) -> Vector:
    """Propagate a sparse vector of states through one slice."""
    p = s.pos
    out: Vector = {}

    def put(key, val):
        nv = out.get(key, ZERO) + val
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)

    if s.op == "id":
        return dict(vec)
    if s.op in ("X+", "X-"):
        cols = _crossing_columns()[(word[p], word[p + 1], 1 if s.op == "X+" else -1)]
        for st, v in vec.items():
            for (a, b), r in cols.get((st[p], st[p + 1]), ()):
                put(st[:p] + (a, b) + st[p + 2 :], v * r)
        return out
    w = _pairings()[s.name]
    if s.op == "cap":
        for st, v in vec.items():
            if st[p] == st[p + 1]:
                put(st[:p] + st[p + 2 :], v * w[st[p]])
        return out
    for st, v in vec.items():
        for i in range(DIM):
            put(st[:p] + (i, i) + st[p:], v * w[i])
    return out


@lru_cache(maxsize=None)
def _poly_slices():
    """Crossing columns and pairing weights with monomial denominators cleared, plus their shifts."""
    rot = rmatrix.rotated_crossings()
    pairs = _pairings()
    shifts = {k: _shift_of(m.values()) for k, m in rot.items()}
    shifts.update({n: _shift_of(w) for n, w in pairs.items()})

    def conv(sh):
        def f(x):
            y = x * FracBi(_mono(*sh))
            if not y.den.is_one():
                raise ArithmeticError("slice entry is not an integral Laurent polynomial")
            return y.num

        return f

    cross = {k: _columns(m, conv(shifts[k])) for k, m in rot.items()}
    weights = {n: tuple(conv(shifts[n])(x) for x in w) for n, w in pairs.items()}
    return cross, weights, shifts


def _is_laurent(vec: Vector) -> bool:
    return all(len(v.den.monoms()) == 1 and v.den.coeffs() == [1] for v in vec.values())


def _run_poly(prog: TangleProgram, vec: Vector) -> Vector:
    """Same as the exact path, on polynomials with one running monomial shift."""
    cross, weights, shifts = _poly_slices()
    sa, sb = _shift_of(vec.values())
    cur = {st: (v * FracBi(_mono(sa, sb))).num for st, v in vec.items()}
    for s, word in zip(prog.slices, prog.words()):
        p = s.pos
        out: Dict[State, object] = {}
        if s.op == "id":
            continue
        if s.op in ("X+", "X-"):
            key = (word[p], word[p + 1], 1 if s.op == "X+" else -1)
            cols = cross[key]
            for st, v in cur.items():
                for (a, b), r in cols.get((st[p], st[p + 1]), ()):
                    k2 = st[:p] + (a, b) + st[p + 2 :]
                    out[k2] = out[k2] + v * r if k2 in out else v * r
        elif s.op == "cap":
            key = s.name
            w = weights[key]
            for st, v in cur.items():
                if st[p] == st[p + 1] and w[st[p]]:
                    k2 = st[:p] + st[p + 2 :]
                    out[k2] = out[k2] + v * w[st[p]] if k2 in out else v * w[st[p]]
        else:
            key = s.name
            w = weights[key]
            for st, v in cur.items():
                for i in range(DIM):
                    if w[i]:
                        out[st[:p] + (i, i) + st[p:]] = v * w[i]
        da, db = shifts[key]
        sa, sb = sa + da, sb + db
        cur = {k: v for k, v in out.items() if not v.is_zero()}
    den = FracBi(_mono(sa, sb))
    return {st: FracBi(v) / den for st, v in cur.items()}


def run_program(prog: TangleProgram, vec: Vector) -> Vector:
    if _is_laurent(vec):
        return _run_poly(prog, vec)
    words = prog.words()
    for s, w in zip(prog.slices, words):
        vec = apply_slice(vec, w, s)
    return vec


def state_index(st: State) -> int:
    i = 0
    for x in st:
        i = i * DIM + x
    return i


def eval_program(prog: TangleProgram) -> SparseMat:
    """The operator of the program: column = source basis state, row = target basis state."""
    out: SparseMat = {}
    for st in itertools.product(range(DIM), repeat=len(prog.source)):
        res = run_program(prog, {st: ONE})
        c = state_index(st)
        for t, v in res.items():
            out[(state_index(t), c)] = v
    return out


def dense_operator(prog: TangleProgram) -> SparseMat:
    """The same operator as a product of full slice matrices (identities tensored in)."""
    from .ring import sp_eye, sp_kron, sp_mul

    words = prog.words()
    total = sp_eye(DIM ** len(prog.source))
    for s, w in zip(prog.slices, words):
        left = DIM ** s.pos
        if s.op == "id":
            continue
        if s.op in ("X+", "X-"):
            core, width_in = rmatrix.rotated_crossings()[(w[s.pos], w[s.pos + 1], 1 if s.op == "X+" else -1)], 2
            rows_core, cols_core = DIM * DIM, DIM * DIM
        elif s.op == "cap":
            core = reps.caps_cups()[s.name].vector()
            width_in, rows_core, cols_core = 2, 1, DIM * DIM
        else:
            core = reps.caps_cups()[s.name].vector()
            width_in, rows_core, cols_core = 0, DIM * DIM, 1
        right = DIM ** (len(w) - s.pos - width_in)
        m = sp_kron(sp_kron(sp_eye(left), core, rows_core, cols_core), sp_eye(right), right)
        total = sp_mul(m, total)
    return total


# -- surfaces: bands on disks, doubling ------------------------------------------------
@dataclass(frozen=True)
class BandOp:
    """Undoubled band diagram op: cup (new band), X+/X- (band crossing), T+/T- (full twist)
    or close (cap off a finished disk whose ``count`` endpoints start at ``pos``)."""

    op: str
    pos: int
    colors: Tuple[str, str] = ("V*", "V")
    count: int = 0

    def to_dict(self) -> dict:
        d = {"op": self.op, "pos": self.pos}
        if self.op == "cup":
            d["colors"] = list(self.colors)
        if self.op == "close":
            d["count"] = self.count
        return d


def band_words(ops: Sequence[BandOp]) -> List[Tuple[str, ...]]:
    words: List[Tuple[str, ...]] = [()]
    for o in ops:
        w = words[-1]
        if o.op == "cup":
            c = _norm_colors(o.colors)
            if set(c) != {"V", "V*"}:
                raise ProgramError("a band cup joins an upward and a downward end")
            words.append(w[: o.pos] + c + w[o.pos :])
        elif o.op in ("X+", "X-"):
            words.append(w[: o.pos] + (w[o.pos + 1], w[o.pos]) + w[o.pos + 2 :])
        elif o.op in ("T+", "T-"):
            if not 0 <= o.pos < len(w):
                raise ProgramError(f"twist at {o.pos} outside word")
            words.append(w)
        elif o.op == "close":
            if o.count % 2 or not 0 <= o.pos <= o.pos + o.count <= len(w):
                raise ProgramError(f"close of {o.count} endpoints at {o.pos} outside word")
            words.append(w[: o.pos] + w[o.pos + o.count :])
        else:
            raise ProgramError(f"unknown band op {o.op!r}")
    return words


def _disk_caps(start: int, e: int) -> List[Slice]:
    """Caps closing a disk whose 2e doubled endpoints start at ``start``; right to left."""
    out = [Slice("cap", start + 2 * j - 1, "Omega+") for j in range(e - 1, 0, -1)]
    if e:
        out.append(Slice("cap", start, "mho-"))
    else:
        # a bare disk: its boundary is a free loop
        out = [Slice("cup", start, "mho+"), Slice("cap", start, "mho-")]
    return out


def double(ops: Sequence[BandOp]) -> TangleProgram:
    """Replace each band core by its two boundary edges; every pair reads (V, V*)."""
    slices: List[Slice] = []
    for o in ops:
        p = 2 * o.pos
        if o.op == "cup":
            slices.append(Slice("cup", p, "mho+"))
            slices.append(Slice("cup", p + 1, "Omega-"))
        elif o.op in ("X+", "X-"):
            for q in (p + 1, p, p + 2, p + 1):
                slices.append(Slice(o.op, q))
        elif o.op == "close":
            slices.extend(_disk_caps(p, o.count))
        else:
            x = "X+" if o.op == "T+" else "X-"
            slices.append(Slice(x, p))
            slices.append(Slice(x, p))
    return TangleProgram((), tuple(slices))


def _band_endpoints(ops: Sequence[BandOp]) -> List[Tuple[int, str]]:
    """(band id, 'A' or 'B') at each final position; A is the downward (start) end."""
    labels: List[Tuple[int, str]] = []
    band = 0
    for o in ops:
        if o.op == "cup":
            c = _norm_colors(o.colors)
            pair = [(band, "A" if c[0] == "V*" else "B"), (band, "A" if c[1] == "V*" else "B")]
            labels = labels[: o.pos] + pair + labels[o.pos :]
        elif o.op == "close":
            labels = labels[: o.pos] + labels[o.pos + o.count :]
            band += 1
        elif o.op in ("X+", "X-"):
            labels[o.pos], labels[o.pos + 1] = labels[o.pos + 1], labels[o.pos]
    return labels


@dataclass(frozen=True)
class SurfaceDiagram:
    """Disks side by side, each carrying a block of band endpoints; the last disk is opened.

    ``blocks`` lists the number of band endpoints on each disk still present at the end,
    left to right; disks capped earlier by a close op count as further components.
    """

    blocks: Tuple[int, ...]
    ops: Tuple[BandOp, ...]

    def __post_init__(self):
        w = band_words(self.ops)[-1]
        if sum(self.blocks) != len(w):
            raise ProgramError(f"blocks cover {sum(self.blocks)} endpoints, program has {len(w)}")

    @property
    def strips(self) -> int:
        return sum(1 for o in self.ops if o.op == "cup")

    def doubled(self) -> TangleProgram:
        return double(self.ops)

    def slot_kinds(self) -> Tuple[str, ...]:
        """'W' at upward band ends, 'W*' at downward ones."""
        return tuple("W" if c == "V" else "W*" for c in band_words(self.ops)[-1])

    def closing(self) -> TangleProgram:
        """Caps joining the doubled endpoints of each disk; the last disk stays open with a through strand."""
        word = self.doubled().target + ("V",)
        slices: List[Slice] = []
        for e in self.blocks[:-1]:
            # earlier disks are capped first, so each starts at position 0
            slices.extend(_disk_caps(0, e))
        e = self.blocks[-1] if self.blocks else 0
        for j in range(e - 1, 0, -1):
            slices.append(Slice("cap", 2 * j - 1, "Omega+"))
        if e:
            slices.append(Slice("cap", 1, "Omega+"))
        return TangleProgram(word, tuple(slices))

    def link_components(self) -> int:
        """Boundary components, by following edges through the doubled diagram and its closing."""
        prog = self.doubled()
        parent: Dict[int, int] = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        fresh = itertools.count()
        through = next(fresh)
        labels: List[int] = []

        def run(slices, labels):
            for s in slices:
                p = s.pos
                if s.op == "cup":
                    a = next(fresh)
                    labels = labels[:p] + [a, a] + labels[p:]
                elif s.op in ("X+", "X-"):
                    labels[p], labels[p + 1] = labels[p + 1], labels[p]
                elif s.op == "cap":
                    parent[find(labels[p])] = find(labels[p + 1])
                    labels = labels[:p] + labels[p + 2 :]
            return labels

        labels = run(prog.slices, labels) + [through]
        run(self.closing().slices, labels)
        return len({find(x) for x in set(parent) | {through}})

    def surface_components(self) -> int:
        return len(self.blocks) + sum(1 for o in self.ops if o.op == "close")

    def genus(self) -> Fraction:
        """Sum over components of (2 - chi - boundaries)/2 with chi = disks - strips."""
        k, l, m = self.surface_components(), self.strips, self.link_components()
        return Fraction(2 * self.surface_components() - (k - l) - m, 2)


def surface_vector(d: SurfaceDiagram) -> Vector:
    """F: the doubled band diagram applied to 1, a vector on all doubled endpoints."""
    return run_program(d.doubled(), {(): ONE})


def close_surface(d: SurfaceDiagram, f: Vector) -> SparseMat:
    """The (1-1) operator V -> V obtained by capping F off along the disks."""
    cl = d.closing()
    out: SparseMat = {}
    for j in range(DIM):
        vec = {st + (j,): v for st, v in f.items()}
        res = run_program(cl, vec)
        for (jp,), v in res.items():
            out[(jp, j)] = v
    return out


def _schur(m: SparseMat) -> FracBi:
    c = m.get((0, 0), ZERO)
    for (a, b), v in m.items():
        if a != b and v:
            raise SchurFailure(f"Schur failure: off-diagonal residue at {(a, b)}")
    for j in range(DIM):
        if m.get((j, j), ZERO) != c:
            raise SchurFailure("Schur failure: unequal diagonal")
    return c


# -- W coordinates and the b, c boxes --------------------------------------------------
@lru_cache(maxsize=None)
def pivot_ratio() -> FracBi:
    """The scalar pi(K) pi(g) on V: caps use K, the dual model Atilde uses the pivot g."""
    v = reps.v_alpha()
    k, g = reps.ribbon_k(v), reps.pivot(v)
    c = k[(0, 0)] * g[(0, 0)]
    if any(k[(i, i)] * g[(i, i)] != c for i in range(DIM)):
        raise InvariantViolation("pi(K) pi(g) is not scalar")
    return c


def w_star_matrix(kind: str = "normalized") -> SparseMat:
    """Image of the W* basis in V (x) V*: 'plain' Atilde, 'normalized' c Atilde, 'rescaled' q^alpha Atilde."""
    if kind == "plain":
        return basis.matrix_Atilde().matrix
    if kind == "rescaled":
        return basis.rescaled_Atilde()
    return sp_scale(basis.matrix_Atilde().matrix, pivot_ratio())


@dataclass(frozen=True)
class GTensor:
    """Coefficients of G against v_i in W slots and c v_i* in W* slots (c = pivot_ratio), indices 0..15."""

    kinds: Tuple[str, ...]
    coeffs: Mapping[Tuple[int, ...], FracBi] = field(repr=False)

    def u_free(self) -> bool:
        return all(x.u_support() == {0} for x in self.coeffs.values())

    def bookkeeping(self) -> FracBi:
        """Factor picked up when the W* boxes use q^alpha Atilde instead of c Atilde."""
        nstar = sum(1 for k in self.kinds if k == "W*")
        return (QA / pivot_ratio()) ** nstar


@lru_cache(maxsize=None)
def _slot_inverses() -> Dict[str, SparseMat]:
    return {
        "W": sp_inverse(basis.matrix_A().matrix, 16),
        "W*": sp_inverse(w_star_matrix("normalized"), 16),
    }


def to_gtensor(d: SurfaceDiagram, f: Vector) -> GTensor:
    """Change each (V, V*) pair to W or W* coordinates."""
    kinds = d.slot_kinds()
    inv = _slot_inverses()
    cur: Dict[Tuple[int, ...], FracBi] = {}
    for st, v in f.items():
        key = tuple(DIM * st[2 * i] + st[2 * i + 1] for i in range(len(kinds)))
        cur[key] = v
    for slot, kind in enumerate(kinds):
        m = inv[kind]
        rows: Dict[int, List[Tuple[int, FracBi]]] = {}
        for (r, c), x in m.items():
            rows.setdefault(c, []).append((r, x))
        nxt: Dict[Tuple[int, ...], FracBi] = {}
        for key, v in cur.items():
            for r, x in rows.get(key[slot], ()):
                k2 = key[:slot] + (r,) + key[slot + 1 :]
                nv = nxt.get(k2, ZERO) + v * x
                if nv:
                    nxt[k2] = nv
                else:
                    nxt.pop(k2, None)
        cur = nxt
    return GTensor(kinds, cur)


def box(kind: str, wstar: str = "normalized") -> Dict[Tuple[int, int], List[Tuple[int, FracBi]]]:
    """b (kind W, through A) or c (kind W*, through the chosen Atilde): (i, j) -> list of (k, scalar).

    The box feeds the V (x) V* image of v_i next to e_j and caps V* against e_j.
    """
    m = basis.matrix_A().matrix if kind == "W" else w_star_matrix(wstar)
    cap = _pairings()["Omega+"]
    out: Dict[Tuple[int, int], List[Tuple[int, FracBi]]] = {}
    for (r, i), x in m.items():
        k, c = divmod(r, DIM)
        out.setdefault((i, c), []).append((k, x * cap[c]))
    return out


def run_boxes(
    kinds: Sequence[str], coeffs: Mapping[Tuple[int, ...], FracBi], j: int, wstar: str = "normalized"
) -> Dict[int, FracBi]:
    """Push e_j leftward through one box per slot, innermost (rightmost) first."""
    boxes = {k: box(k, wstar) for k in set(kinds)}
    total: Dict[int, FracBi] = {}
    for key, lam in coeffs.items():
        vec = {j: lam}
        for slot in range(len(kinds) - 1, -1, -1):
            bx = boxes[kinds[slot]]
            nxt: Dict[int, FracBi] = {}
            for e, v in vec.items():
                for k, x in bx.get((key[slot], e), ()):
                    nxt[k] = nxt.get(k, ZERO) + v * x
            vec = {k: v for k, v in nxt.items() if v}
            if not vec:
                break
        for k, v in vec.items():
            total[k] = total.get(k, ZERO) + v
    return {k: v for k, v in total.items() if v}


@dataclass(frozen=True)
class BottomTangle:
    """A genus-g knot surface: one disk, 2g bands, ends ordered A1 A2 B1 B2 A3 A4 B3 B4 ..."""

    genus: int
    ops: Tuple[BandOp, ...]
    label: str = ""

    def __post_init__(self):
        labels = _band_endpoints(self.ops)
        if len(labels) != 4 * self.genus:
            raise ProgramError(f"genus {self.genus} needs {4 * self.genus} endpoints, found {len(labels)}")
        order = {}
        for h in range(self.genus):
            chunk = labels[4 * h : 4 * h + 4]
            if [x[1] for x in chunk] != ["A", "A", "B", "B"]:
                raise ProgramError(f"handle {h + 1} endpoints read {[x[1] for x in chunk]}, want A A B B")
            if chunk[0][0] != chunk[2][0] or chunk[1][0] != chunk[3][0]:
                raise ProgramError(f"handle {h + 1} bands are not interleaved as A1 A2 B1 B2")

    def surface(self) -> SurfaceDiagram:
        return SurfaceDiagram((4 * self.genus,), self.ops)

    def to_json(self) -> str:
        return json.dumps({"genus": self.genus, "label": self.label, "ops": [o.to_dict() for o in self.ops]})

    @staticmethod
    def from_json(text) -> "BottomTangle":
        d = json.loads(text) if isinstance(text, str) else text
        ops = tuple(BandOp(o["op"], int(o["pos"]), tuple(o.get("colors", ("V*", "V"))), int(o.get("count", 0))) for o in d["ops"])
        return BottomTangle(int(d["genus"]), ops, d.get("label", ""))


def genus_one(twist_a: int, twist_b: int, clasp: str = "X+") -> BottomTangle:
    """Two interleaved bands with the given signed numbers of full twists."""
    ops: List[BandOp] = [BandOp("cup", 0), BandOp("cup", 2), BandOp(clasp, 1)]
    for pos, tw in ((0, twist_a), (1, twist_b)):
        ops += [BandOp("T+" if tw > 0 else "T-", pos)] * abs(tw)
    return BottomTangle(1, tuple(ops), f"genus-one({twist_a},{twist_b},{clasp})")


@dataclass(frozen=True)
class PipelineResult:
    """``scalar`` is read through q^alpha Atilde boxes; ``lg`` = scalar / ``bookkeeping``."""

    G: GTensor
    lg: LGValue
    scalar: FracBi
    bookkeeping: FracBi
    dz: object
    dt: object
    by_caps: FracBi
    by_boxes: FracBi


def surface_pipeline(bt: BottomTangle, reference: Optional[BraidWord] = None) -> PipelineResult:
    """Double B, read G in W coordinates, close with the b and c boxes, audit degrees."""
    if bt.genus == 0:
        g = GTensor((), {(): ONE})
        return PipelineResult(g, LGValue(ONE), ONE, ONE, 0, 0, ONE, ONE)
    d = bt.surface()
    f = surface_vector(d)
    by_caps = _schur(close_surface(d, f))
    g = to_gtensor(d, f)
    if not g.u_free():
        raise InvariantViolation("G has coefficients depending on q^alpha")
    res = run_boxes(g.kinds, g.coeffs, 0)
    if any(k != 0 for k in res):
        raise SchurFailure("box evaluation leaves e_1")
    by_boxes = res.get(0, ZERO)
    if by_boxes != by_caps:
        raise InvariantViolation("box evaluation disagrees with the cap closure")
    scalar = run_boxes(g.kinds, g.coeffs, 0, wstar="rescaled").get(0, ZERO)
    book = g.bookkeeping()
    if scalar != by_caps * book:
        raise InvariantViolation("rescaled boxes disagree with the bookkeeping monomial")
    lg = LGValue(by_caps)
    if reference is not None and lg_from_braid(reference).value != lg.value:
        raise InvariantViolation("surface pipeline disagrees with the braid closure")
    dz = deg_z(scalar) if scalar else None
    dt = deg_t(scalar) if scalar else None
    if scalar and (dz > 8 * bt.genus or dt > 0):
        raise InvariantViolation(f"degree audit fails: dz={dz}, dt={dt}, g={bt.genus}")
    return PipelineResult(g, lg, scalar, book, dz, dt, by_caps, by_boxes)


# -- admissible diagrams ----------------------------------------------------------------
@dataclass(frozen=True)
class AdmissibleDiagram:
    """k disks, l strips, m boundary components, realised as a surface diagram."""

    k: int
    l: int
    m: int
    surface: SurfaceDiagram

    def __post_init__(self):
        s = self.surface
        if s.surface_components() != self.k or s.strips != self.l:
            raise ProgramError("disk or strip count does not match the diagram")
        if s.link_components() != self.m:
            raise ProgramError(f"diagram has {s.link_components()} boundary components, not {self.m}")
        g = s.genus()
        if g < 0 or g.denominator != 1:
            raise ProgramError(f"Euler count gives genus {g}")


@dataclass(frozen=True)
class AdmissibleResult:
    lg: LGValue
    span: Optional[Fraction]
    bound: int
    rescaled_lg: FracBi
    bookkeeping: FracBi


def admissible_eval(d: AdmissibleDiagram) -> AdmissibleResult:
    """Evaluate through caps; the closed disks' mho- caps are also run rescaled, with the monomial tracked."""
    s = d.surface
    f = surface_vector(s)
    val = _schur(close_surface(s, f))
    # rescaled caps: mho- weights times q^{2 alpha} (the big cap on each closed disk)
    closed = s.surface_components() - 1
    book = QA ** (2 * closed)
    rescaled = val * book
    lg = LGValue(val)
    span = lg.span
    if span is not None and span > 2 * d.l:
        raise InvariantViolation(f"span {span} exceeds 2 l = {2 * d.l}")
    return AdmissibleResult(lg, span, 2 * d.l, rescaled, book)


def boundary_link_example() -> AdmissibleDiagram:
    """Two disks with two interleaved twisted bands each; a band of the open disk clasps the
    closed disk, which is capped before the open disk's second band is built."""
    ops = (
        BandOp("cup", 0), BandOp("cup", 2), BandOp("X+", 1), BandOp("T-", 0), BandOp("T-", 1),
        BandOp("cup", 4), BandOp("X+", 3), BandOp("X+", 3), BandOp("close", 0, count=4),
        BandOp("cup", 2), BandOp("X+", 1), BandOp("T-", 0), BandOp("T+", 1),
    )
    return AdmissibleDiagram(2, 4, 2, SurfaceDiagram((4,), ops))


def split_disks_example() -> AdmissibleDiagram:
    """Two bare disks: the two-component unlink."""
    return AdmissibleDiagram(2, 0, 2, SurfaceDiagram((0, 0), ()))


# -- cables ------------------------------------------------------------------------------
def _full_twist(first: int, n: int, sign: int) -> List[int]:
    gens = list(range(first, first + n - 1))
    return [sign * g for g in gens] * n


def cable(b: BraidWord, n: int) -> BraidWord:
    """The (n, 0)-cable: n parallel copies in blackboard framing, corrected by -writhe full twists."""
    if n < 1:
        raise ValueError("cable multiplicity must be positive")
    if b.components() != 1:
        raise ValueError("cabling needs a knot braid")
    word: List[int] = []
    for g in b.word:
        i = abs(g) - 1
        sgn = 1 if g > 0 else -1
        block = []
        # strands i*n .. i*n+n-1 cross strands (i+1)*n .. (i+1)*n+n-1
        for r in range(n):
            for c in range(n):
                block.append(sgn * (i * n + n + r - c))
        word.extend(block)
    w = b.writhe()
    if n > 1:
        for _ in range(abs(w)):
            word.extend(_full_twist(1, n, -1 if w > 0 else 1))
    return BraidWord(b.strands * n, tuple(word))
