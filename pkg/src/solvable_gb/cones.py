"""Cone decompositions, Macaulay constants and Hilbert data.

A cone (w, y, h) stands for the space C(w, y) * h, where C(w, y) is spanned
by the monomials x^w * x^u with u supported on the variable set y.  For
monomial cones h is None (meaning h = 1).  Variable sets are frozensets of
0-based indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from . import monomials as mono
from .errors import SemanticError


@dataclass(frozen=True)
class Cone:
    w: tuple
    y: frozenset
    h: object = None  # homogeneous Polynomial or None for 1

    @property
    def hdeg(self) -> int:
        return 0 if self.h is None else self.h.deg

    @property
    def degree(self) -> int:
        return sum(self.w) + self.hdeg

    @property
    def dim(self) -> int:
        return len(self.y)

    def contains_monomial(self, a) -> bool:
        """Membership of x^a in C(w, y); only meaningful for monomial cones."""
        if not mono.divides(self.w, a):
            return False
        return all(ai == wi or i in self.y for i, (ai, wi) in enumerate(zip(a, self.w)))

    def monomials(self, k: int):
        """Monomials of C(w, y) of total degree k (ignoring h)."""
        rest = k - sum(self.w)
        if rest < 0:
            return
        ys = sorted(self.y)
        if not ys:
            if rest == 0:
                yield self.w
            return
        for u in mono.monomials_of_degree(len(ys), rest):
            a = list(self.w)
            for idx, e in zip(ys, u):
                a[idx] += e
            yield tuple(a)

    def count(self, d: int) -> int:
        """dim of the degree-d part of the cone."""
        e = self.degree
        if not self.y:
            return 1 if d == e else 0
        return binom(d - e + self.dim - 1, self.dim - 1)

    def elements(self, d: int) -> list:
        """Spanning polynomials of the degree-d part (requires h or an algebra via h)."""
        if self.h is None:
            raise SemanticError("monomial cone has no algebra attached; use monomials()")
        A = self.h.algebra
        return [A.monomial(m) * self.h for m in self.monomials(d - self.hdeg)]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero for n < k or negative n."""
    if k < 0 or n < 0 or n < k:
        return 0
    return comb(n, k)


def degree_of(cones: Iterable[Cone]):
    """max cone degree, None for the empty family (standing in for -infinity)."""
    return max((c.degree for c in cones), default=None)


def plus_part(cones: Iterable[Cone]) -> list:
    return [c for c in cones if c.y]


# -- QUOTIENT / SPLIT ----------------------------------------------------------


def quotient_gens(F: Iterable[tuple], i: int) -> set:
    """Generators of (I : x_i) from generators F of I."""
    out = set()
    for v in F:
        if not 0 <= i < len(v):
            raise IndexError(f"variable index {i} out of range")
        if v[i] > 0:
            v = v[:i] + (v[i] - 1,) + v[i + 1:]
        out.add(v)
    return out


def _pick_subset(y, supports, policy):
    ys = sorted(y)
    for size in range(len(ys), -1, -1):
        combos = list(itertools.combinations(ys, size))
        if policy == "greatest":
            combos.reverse()
        for z in combos:
            zs = set(z)
            if not any(s <= zs for s in supports):
                return zs
    return set()


def split(w: tuple, y, F: Iterable[tuple], policy: str = "least"):
    """Split C(w, y) against the monomial ideal I, given generators F of (I : w).

    Returns (P, Q): P-cones lie in I, Q-cones meet I trivially.  ``policy``
    ("least" or "greatest") fixes the tie-breaks for the subset z and the
    splitting variable.
    """
    w = tuple(w)
    y = frozenset(y)
    F = mono.minimal_generators(F)
    zero = (0,) * len(w)
    if zero in F:
        return [Cone(w, y)], []
    supports = [frozenset(i for i, e in enumerate(f) if e) for f in F]
    if not any(s <= y for s in supports):
        return [], [Cone(w, y)]
    z = _pick_subset(y, supports, policy)
    free = sorted(y - z)
    i = free[0] if policy != "greatest" else free[-1]
    P0, Q0 = split(w, y - {i}, F, policy)
    w1 = w[:i] + (w[i] + 1,) + w[i + 1:]
    P1, Q1 = split(w1, y, quotient_gens(F, i), policy)
    return P0 + P1, Q0 + Q1


def split_complement(F: Iterable[tuple], n: int | None = None, policy: str = "least"):
    """split(1, x, F): decompositions of the monomial ideal and of its complement."""
    F = [tuple(f) for f in F]
    if n is None:
        if not F:
            raise ValueError("need n when F is empty")
        n = len(F[0])
    return split((0,) * n, range(n), F, policy)


def truncate_gb(G, Q: Sequence[Cone]):
    """Keep the elements whose leading monomial has degree <= 1 + deg(Q)."""
    from .groebner import GroebnerBasis

    dq = degree_of(Q)
    limit = 0 if dq is None else dq + 1
    elems = [g for g in G if sum(g.lm) <= limit]
    return GroebnerBasis(G.algebra, elems, False, list(elems))


# -- standardness, shifting, exactness -----------------------------------------


def is_d_standard(D: Sequence[Cone]):
    """Least d for which D is d-standard, or None if D is not standard at all."""
    plus = plus_part(D)
    if not plus:
        return 0
    d = min(c.degree for c in plus)
    best = {}
    for c in plus:
        best[c.degree] = max(best.get(c.degree, 0), c.dim)
    for c in plus:
        for dd in range(d, c.degree + 1):
            if best.get(dd, -1) < c.dim:
                return None
    return d


def _shift_family(c: Cone) -> list:
    out = [Cone(c.w, frozenset(), c.h)]
    for i in sorted(c.y):
        w1 = c.w[:i] + (c.w[i] + 1,) + c.w[i + 1:]
        out.append(Cone(w1, frozenset(j for j in c.y if j >= i), c.h))
    return out


def shift_standard(D: Sequence[Cone], target: int) -> list:
    """Re-decompose a standard D into a ``target``-standard decomposition."""
    D = list(D)
    d0 = is_d_standard(D)
    if d0 is None:
        raise SemanticError("decomposition is not standard")
    if not plus_part(D):
        return D
    if target < d0:
        raise SemanticError(f"cannot shift a {d0}-standard decomposition down to {target}")
    for cur in range(d0, target):
        nxt = []
        for c in D:
            if c.y and c.degree == cur:
                nxt.extend(_shift_family(c))
            else:
                nxt.append(c)
        D = nxt
    return D


@dataclass(frozen=True)
class MacaulayConstants:
    b: tuple

    def __getitem__(self, i):
        return self.b[i]

    def __iter__(self):
        return iter(self.b)

    def __len__(self):
        return len(self.b)


def is_standard_for(D: Sequence[Cone], d: int) -> bool:
    """Check both d-standard conditions for a given d."""
    plus = plus_part(D)
    best = {}
    for c in plus:
        if c.degree < d:
            return False
        best[c.degree] = max(best.get(c.degree, 0), c.dim)
    return all(best.get(dd, -1) >= c.dim for c in plus for dd in range(d, c.degree + 1))


def macaulay_constants(D: Sequence[Cone], n: int, d: int | None = None) -> MacaulayConstants:
    """b_i = max(d_D, 1 + deg D_i) with D_i the cones of dimension >= i.

    ``d`` pins the standard degree (useful when D^+ is empty, where D is
    d-standard for every d); by default the least valid d is used.
    """
    if d is None:
        d = is_d_standard(D)
        if d is None:
            raise SemanticError("decomposition is not standard")
    elif not is_standard_for(D, d):
        raise SemanticError(f"decomposition is not {d}-standard")
    b = []
    for i in range(n + 2):
        Di = [c for c in D if c.dim >= i]
        b.append(d if not Di else max(d, 1 + degree_of(Di)))
    return MacaulayConstants(tuple(b))


def is_exact(D: Sequence[Cone]) -> bool:
    degs = [c.degree for c in plus_part(D)]
    return len(degs) == len(set(degs))


def make_exact(D: Sequence[Cone], n: int, policy: str = "least", d: int | None = None, max_steps: int = 1_000_000):
    """Split cones until every degree carries at most one positive-dimensional cone.

    At the lowest crowded degree, the cone of smallest dimension (ties: larger
    apex) is split along one of its variables; some other cone of that degree
    has at least its dimension, so d-standardness is preserved.
    """
    D = list(D)
    ok = is_d_standard(D) is not None if d is None else is_standard_for(D, d)
    if not ok:
        raise SemanticError("decomposition is not standard")
    for _ in range(max_steps):
        by_deg = {}
        for idx, c in enumerate(D):
            if c.y:
                by_deg.setdefault(c.degree, []).append(idx)
        crowded = [e for e, idxs in by_deg.items() if len(idxs) >= 2]
        if not crowded:
            return D, macaulay_constants(D, n, d)
        e = min(crowded)
        idxs = sorted(by_deg[e], key=lambda k: (D[k].dim, tuple(-x for x in D[k].w)))
        target = D[idxs[0]]
        ys = sorted(target.y)
        i = ys[0] if policy != "greatest" else ys[-1]
        w1 = target.w[:i] + (target.w[i] + 1,) + target.w[i + 1:]
        D[idxs[0]] = Cone(target.w, target.y - {i}, target.h)
        D.append(Cone(w1, target.y, target.h))
    raise RuntimeError("exactification did not terminate within the step budget")


# -- Hilbert data ----------------------------------------------------------------


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_add(p, q, scale=1):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += scale * b
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def binom_poly(shift: int, k: int):
    """Coefficients (low to high) of binom(T + shift, k) as a polynomial in T."""
    p = [Fraction(1)]
    for m in range(k):
        p = _poly_mul(p, [Fraction(shift - m), Fraction(1)])
    f = factorial(k)
    return [c / f for c in p]


def poly_eval(p, t):
    return sum(c * Fraction(t) ** i for i, c in enumerate(p))


def hilbert_polynomial_from_cones(D: Sequence[Cone]) -> tuple:
    total = [Fraction(0)]
    for c in plus_part(D):
        total = _poly_add(total, binom_poly(-c.degree + c.dim - 1, c.dim - 1))
    return _trim(total)


def hilbert_polynomial_from_macaulay(b: Sequence[int], n: int) -> tuple:
    """binom(T-b_{N+1}+N, N) - 1 - sum_i binom(T-b_i+i-1, i)."""
    total = binom_poly(n - b[n + 1], n)
    total = _poly_add(total, [Fraction(1)], -1)
    for i in range(1, n + 1):
        total = _poly_add(total, binom_poly(i - 1 - b[i], i), -1)
    return _trim(total)


@dataclass
class HilbertData:
    table: tuple
    polynomial: tuple  # rational coefficients, constant term first
    regularity: int
    macaulay: MacaulayConstants | None = None
    macaulay_polynomial: tuple | None = None
    sigma: int | None = None  # least r >= b_1 from which H and P agree

    def value(self, d: int) -> int:
        return self.table[d]

    def polynomial_at(self, d: int):
        return poly_eval(self.polynomial, d)


def hilbert_function(D: Sequence[Cone], d: int) -> int:
    return sum(c.count(d) for c in D)


def hilbert_from_decomposition(D: Sequence[Cone], n: int, d_max: int = 10) -> HilbertData:
    D = list(D)
    deg = degree_of(D)
    top = max(d_max, 0 if deg is None else deg + 1)
    table = tuple(hilbert_function(D, d) for d in range(top + 1))
    P = hilbert_polynomial_from_cones(D)
    r = 0 if deg is None else deg + 1
    while r > 0 and table[r - 1] == poly_eval(P, r - 1):
        r -= 1
    data = HilbertData(table[: d_max + 1], P, r)
    if is_exact(D) and is_d_standard(D) is not None:
        b = macaulay_constants(D, n)
        data.macaulay = b
        data.macaulay_polynomial = hilbert_polynomial_from_macaulay(b.b, n)
        data.sigma = max(r, b[1])
    return data


# -- ideals ----------------------------------------------------------------------


@dataclass
class IdealDecomposition:
    """I = C(1, x, f_1) + M with ``rest`` a d-standard decomposition of M."""

    generators: list
    principal: Cone
    rest: list
    d: int

    @property
    def cones(self) -> list:
        return [self.principal] + list(self.rest)


def decompose_homogeneous_ideal(gens, policy: str = "least") -> IdealDecomposition:
    """Cone decomposition of a homogeneous left ideal, d-standard for d = max deg f_i.

    A generator of maximal degree is moved to the front; the remaining pieces
    nf_{G_i}(R) f_i are shifted to d-standard form.
    """
    from .syzygy import colon_ideal

    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    A = gens[0].algebra
    if not A.homogeneous:
        raise SemanticError("ideal decompositions need a homogeneous algebra")
    if any(not g.is_homogeneous() for g in gens):
        raise SemanticError("ideal decompositions need homogeneous generators")
    d = max(g.deg for g in gens)
    first = next(k for k, g in enumerate(gens) if g.deg == d)
    gens = [gens[first]] + gens[:first] + gens[first + 1:]
    n = A.n
    principal = Cone((0,) * n, frozenset(range(n)), gens[0])
    rest = []
    for i in range(1, len(gens)):
        G = colon_ideal(gens[:i], gens[i])
        Q = split_complement([g.lm for g in G], n, policy)[1]
        piece = [Cone(c.w, c.y, gens[i]) for c in Q]
        rest.extend(shift_standard(piece, d))
    return IdealDecomposition(gens, principal, rest, d)


def cone_to_json(c: Cone, names) -> dict:
    from .parsing import format_monomial, format_poly

    return {
        "w": format_monomial(names, c.w) or "1",
        "y": [names[i] for i in sorted(c.y)],
        "h": "1" if c.h is None else format_poly(c.h),
    }
