"""Left reduction, Buchberger's algorithm and reduced Groebner bases.

Everything here works with left ideals: reduction steps subtract left
multiples x^b * g.  Internally polynomials are term dicts; the public
functions take and return :class:`Polynomial` objects.
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import monomials as mono
from .algebra import (
    Polynomial,
    SolvableAlgebra,
    _axpy,
    dehomogenize_poly,
    homogenize_poly,
    rees,
)
from .errors import SemanticError


class BudgetExceeded(RuntimeError):
    """Raised when a Buchberger run exceeds its optional pair budget."""


# -- term-dict helpers -------------------------------------------------------


def _mul_rep(A, p: dict, rep: dict) -> dict:
    """p * rep for a sparse vector rep (index -> term dict)."""
    out = {}
    for idx, t in rep.items():
        prod = A.mul_terms(p, t)
        if prod:
            out[idx] = prod
    return out


def _rep_axpy(acc: dict, scale, rep: dict, one):
    for idx, t in rep.items():
        cur = acc.setdefault(idx, {})
        _axpy(cur, scale, t)
        if not cur:
            del acc[idx]


def _reduce(A: SolvableAlgebra, f: dict, basis: list, lms: list, order_idx: list, track: bool):
    """Full left reduction of f.

    Always reduces the largest reducible monomial, using the basis element
    with the smallest leading monomial (ties: lowest index); ``order_idx``
    lists basis indices in that preference order.  Returns the remainder
    and, when ``track`` is set, a dict index -> cofactor term dict.
    """
    f = dict(f)
    rem = {}
    cof = {}
    key = A.key
    while f:
        a = max(f, key=key)
        c = f[a]
        k = None
        for idx in order_idx:
            if mono.divides(lms[idx], a):
                k = idx
                break
        if k is None:
            rem[a] = c
            del f[a]
            continue
        b = mono.sub(a, lms[k])
        g = basis[k]
        kappa = A._mul_mono(b, lms[k])[a] * g[lms[k]]
        s = c / kappa
        for m, cm in g.items():
            _axpy(f, -s * cm, A._mul_mono(b, m))
        f.pop(a, None)
        if track:
            cur = cof.setdefault(k, {})
            _axpy(cur, s, {b: A.field.one})
    return rem, cof


def _s_data(A: SolvableAlgebra, f: dict, lmf, g: dict, lmg):
    """S(f, g) = d lc(g) x^alpha f - c lc(f) x^beta g with exact cancellation.

    c and d are the scalars produced by x^alpha * lm(f) and x^beta * lm(g).
    Returns (S, alpha, coef_f, beta, coef_g).
    """
    L = mono.lcm(lmf, lmg)
    alpha = mono.sub(L, lmf)
    beta = mono.sub(L, lmg)
    c = A._mul_mono(alpha, lmf)[L]
    d = A._mul_mono(beta, lmg)[L]
    coef_f = d * g[lmg]
    coef_g = c * f[lmf]
    S = A.mono_times(alpha, f, coef_f)
    _axpy(S, -coef_g, A.mono_times(beta, g))
    S.pop(L, None)
    return S, alpha, coef_f, beta, coef_g


# -- public types ------------------------------------------------------------


@dataclass
class ReductionCertificate:
    """f = sum(cofactors[k] * basis[k]) + remainder."""

    basis: list
    cofactors: list
    remainder: Polynomial

    def check(self, f: Polynomial) -> bool:
        total = self.remainder
        for p, g in zip(self.cofactors, self.basis):
            if p:
                total = total + p * g
        return total == f


@dataclass
class GroebnerBasis:
    """A finite generating set with cached leading data.

    ``certificates[k][i]`` (when present) expresses element k in the original
    generators: ``elements[k] = sum_i certificates[k][i] * gens[i]``.
    """

    algebra: SolvableAlgebra
    elements: list
    reduced: bool = False
    gens: list = field(default_factory=list)
    certificates: list | None = None
    homogeneous_basis: "GroebnerBasis | None" = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lms = [g.lm for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    @property
    def max_degree(self) -> int:
        return max((g.deg for g in self.elements), default=-1)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(self.elements, f).remainder

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def generator_certificates(self) -> list:
        """Matrix B with gens[i] = sum_k B[i][k] * elements[k] (requires a GB)."""
        rows = []
        for f in self.gens:
            cert = normal_form(self.elements, f)
            if cert.remainder:
                raise SemanticError("generator does not reduce to zero; not a Groebner basis")
            rows.append(cert.cofactors)
        return rows

    def __str__(self):
        from .parsing import format_poly_list

        return format_poly_list(self.elements)


@dataclass
class GBCheck:
    ok: bool
    pair: tuple | None = None
    witness: Polynomial | None = None

    def __bool__(self):
        return self.ok


@dataclass
class MembershipResult:
    member: bool
    cofactors: list | None = None
    witness: Polynomial | None = None

    def __bool__(self):
        return self.member


# -- operations --------------------------------------------------------------


def _algebra_of(polys, algebra=None):
    for p in polys:
        if algebra is None:
            algebra = p.algebra
        else:
            algebra._check(p)
    if algebra is None:
        raise SemanticError("cannot infer the algebra of an empty list")
    return algebra


def _preference(A, lms):
    return sorted(range(len(lms)), key=lambda k: (A.key(lms[k]), k))


def normal_form(G, f: Polynomial) -> ReductionCertificate:
    """Reduce f by G, returning cofactors and the irreducible remainder."""
    basis = list(G.elements if isinstance(G, GroebnerBasis) else G)
    A = f.algebra
    for g in basis:
        A._check(g)
        if not g:
            raise ValueError("basis elements must be nonzero")
    terms = [g.terms for g in basis]
    lms = [g.lm for g in basis]
    rem, cof = _reduce(A, f.terms, terms, lms, _preference(A, lms), True)
    cofactors = [Polynomial(A, cof.get(k, {}), _clean=True) for k in range(len(basis))]
    return ReductionCertificate(basis, cofactors, Polynomial(A, rem, _clean=True))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    A = f.algebra
    A._check(g)
    S = _s_data(A, f.terms, f.lm, g.terms, g.lm)[0]
    return Polynomial(A, S, _clean=True)


def _finish(A, basis, reps, gens, track, reduced):
    order = sorted(range(len(basis)), key=lambda k: A.key(mono_lm(A, basis[k])))
    elements = [Polynomial(A, basis[k], _clean=True) for k in order]
    certs = None
    if track:
        certs = [
            [Polynomial(A, reps[k].get(i, {}), _clean=True) for i in range(len(gens))]
            for k in order
        ]
    return GroebnerBasis(A, elements, reduced, list(gens), certs)


def mono_lm(A, terms):
    return max(terms, key=A.key)


def _buchberger_terms(A, gens, track, max_pairs=None):
    one = A.field.one
    basis, lms, reps = [], [], []
    for idx, g in enumerate(gens):
        if not g:
            continue
        inv = one / g.lc
        t = {m: c * inv for m, c in g.terms.items()}
        if t in basis:
            continue
        basis.append(t)
        lms.append(g.lm)
        reps.append({idx: {A.zero_index: inv}} if track else None)
    order_idx = _preference(A, lms)
    heap = []

    def push(i, j):
        L = mono.lcm(lms[i], lms[j])
        # normal strategy: smallest lcm in the monomial ordering first
        heapq.heappush(heap, (A.key(L), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} S-pairs")
        S, alpha, cf, beta, cg = _s_data(A, basis[i], lms[i], basis[j], lms[j])
        rem, cof = _reduce(A, S, basis, lms, order_idx, track)
        if not rem:
            continue
        lm_r = max(rem, key=A.key)
        inv = one / rem[lm_r]
        new = {m: c * inv for m, c in rem.items()}
        rep = None
        if track:
            # rep(S) - sum cof_k rep_k, then scale
            rep = {}
            _rep_axpy(rep, cf, _mul_rep(A, {alpha: one}, reps[i]), one)
            _rep_axpy(rep, -cg, _mul_rep(A, {beta: one}, reps[j]), one)
            for k, p in cof.items():
                _rep_axpy(rep, -one, _mul_rep(A, p, reps[k]), one)
            rep = {idx: {m: c * inv for m, c in t.items()} for idx, t in rep.items()}
        basis.append(new)
        lms.append(lm_r)
        reps.append(rep)
        k = len(basis) - 1
        insort(order_idx, k, key=lambda q: (A.key(lms[q]), q))
        for i2 in range(k):
            push(i2, k)
    return basis, lms, reps


def buchberger(gens: Sequence[Polynomial], certificates=False, algebra=None, max_pairs=None) -> GroebnerBasis:
    """Groebner basis of the left ideal generated by ``gens`` (not reduced)."""
    gens = list(gens)
    A = _algebra_of(gens, algebra)
    basis, lms, reps = _buchberger_terms(A, gens, certificates, max_pairs)
    return _finish(A, basis, reps, gens, certificates, False)


def _reduce_terms(A, basis, lms, reps, track):
    one = A.field.one
    keep = []
    for k in sorted(range(len(basis)), key=lambda q: (A.key(lms[q]), q)):
        if not any(mono.divides(lms[q], lms[k]) for q in keep):
            keep.append(k)
    basis = [basis[k] for k in keep]
    lms = [lms[k] for k in keep]
    reps = [reps[k] for k in keep] if track else [None] * len(keep)
    for k in range(len(basis)):
        others = [q for q in range(len(basis)) if q != k]
        sub_basis = [basis[q] for q in others]
        sub_lms = [lms[q] for q in others]
        rem, cof = _reduce(A, basis[k], sub_basis, sub_lms, _preference(A, sub_lms), track)
        inv = one / rem[lms[k]]
        if track:
            rep = {idx: dict(t) for idx, t in reps[k].items()}
            for pos, p in cof.items():
                _rep_axpy(rep, -one, _mul_rep(A, p, reps[others[pos]]), one)
            reps[k] = {idx: {m: c * inv for m, c in t.items()} for idx, t in rep.items()}
        basis[k] = {m: c * inv for m, c in rem.items()}
    return basis, lms, reps


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal generated by G."""
    A = G.algebra
    track = G.certificates is not None
    basis = [g.terms for g in G.elements]
    lms = list(G.lms)
    reps = None
    if track:
        reps = [
            {i: c.terms for i, c in enumerate(row) if c} for row in G.certificates
        ]
    basis, lms, reps = _reduce_terms(A, basis, lms, reps, track)
    out = _finish(A, basis, reps, G.gens, track, True)
    out.homogeneous_basis = G.homogeneous_basis
    return out


def groebner(gens: Sequence[Polynomial], certificates=False, algebra=None, max_pairs=None) -> GroebnerBasis:
    """Reduced Groebner basis of the left ideal generated by ``gens``."""
    return reduce_basis(buchberger(gens, certificates, algebra, max_pairs))


def is_groebner(G) -> GBCheck:
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    if not elems:
        return GBCheck(True)
    A = _algebra_of(elems)
    if any(not g for g in elems):
        raise ValueError("Groebner basis candidates must be nonzero")
    terms = [g.terms for g in elems]
    lms = [g.lm for g in elems]
    order_idx = _preference(A, lms)
    for j in range(len(elems)):
        for i in range(j):
            S = _s_data(A, terms[i], lms[i], terms[j], lms[j])[0]
            rem, _ = _reduce(A, S, terms, lms, order_idx, False)
            if rem:
                return GBCheck(False, (i, j), Polynomial(A, rem, _clean=True))
    return GBCheck(True)


def compose_certificate(G: GroebnerBasis, cofactors: Sequence[Polynomial]) -> list:
    """Turn cofactors w.r.t. G's elements into cofactors w.r.t. G.gens."""
    A = G.algebra
    ys = [A.zero() for _ in G.gens]
    for p, row in zip(cofactors, G.certificates):
        if not p:
            continue
        for i, a in enumerate(row):
            if a:
                ys[i] = ys[i] + p * a
    return ys


def membership(gens: Sequence[Polynomial], f: Polynomial, method="direct") -> MembershipResult:
    """Decide f in (gens); on success return y_i with f = sum y_i gens[i]."""
    gens = list(gens)
    A = f.algebra
    if not any(gens):
        if not f:
            return MembershipResult(True, [A.zero() for _ in gens])
        return MembershipResult(False, witness=f)
    if method == "homogenized":
        G = groebner_via_homogenization(gens, certificates=True)
    else:
        G = buchberger(gens, certificates=True)
    cert = normal_form(G, f)
    if cert.remainder:
        return MembershipResult(False, witness=cert.remainder)
    return MembershipResult(True, compose_certificate(G, cert.cofactors))


def check_combination(gens: Sequence[Polynomial], ys: Sequence[Polynomial], f: Polynomial) -> bool:
    total = f.algebra.zero()
    for y, g in zip(ys, gens):
        if y:
            total = total + y * g
    return total == f


def irreducible_monomial_basis(G, up_to: int) -> list:
    """All monomials of degree <= up_to not divisible by any lm(g)."""
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    A = _algebra_of(elems) if elems else None
    if A is None:
        raise SemanticError("need at least one element to fix the algebra")
    lms = [g.lm for g in elems]
    out = [
        a for a in mono.monomials_up_to(A.n, up_to)
        if not any(mono.divides(m, a) for m in lms)
    ]
    return sorted(out, key=A.key)


def hilbert_function_quotient(G, d: int, algebra: SolvableAlgebra | None = None) -> int:
    """dim of the degree-d part of R/I for a homogeneous ideal with GB G."""
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    A = algebra or (G.algebra if isinstance(G, GroebnerBasis) else _algebra_of(elems))
    if not A.homogeneous:
        raise SemanticError("Hilbert functions need a homogeneous algebra")
    if any(not g.is_homogeneous() for g in elems):
        raise SemanticError("Hilbert functions need a homogeneous ideal")
    lms = [g.lm for g in elems]
    inside = sum(
        1 for a in mono.monomials_of_degree(A.n, d) if any(mono.divides(m, a) for m in lms)
    )
    return comb(A.n + d - 1, d) - inside


def ambient_hilbert(n: int, d: int) -> int:
    return comb(n + d - 1, d) if d >= 0 else 0


def groebner_via_homogenization(gens: Sequence[Polynomial], certificates=False, max_pairs=None) -> GroebnerBasis:
    """Homogenize into the Rees algebra, take the reduced GB H there, return H dehomogenized.

    The result is a Groebner basis of (gens) but usually not reduced; the
    Rees-side basis is kept as ``homogeneous_basis``.
    """
    gens = list(gens)
    A = _algebra_of(gens)
    R = rees(A)
    hgens = [homogenize_poly(A, g) if g else R.zero() for g in gens]
    H = reduce_basis(buchberger(hgens, certificates, R, max_pairs))
    elems, certs, seen = [], [], set()
    for k, h in enumerate(H.elements):
        g = dehomogenize_poly(R, h)
        key = frozenset(g.terms.items())
        if key in seen:
            continue
        seen.add(key)
        elems.append(g)
        if certificates:
            certs.append([dehomogenize_poly(R, y) for y in H.certificates[k]])
    order = sorted(range(len(elems)), key=lambda k: A.key(elems[k].lm))
    out = GroebnerBasis(
        A,
        [elems[k] for k in order],
        False,
        gens,
        [certs[k] for k in order] if certificates else None,
    )
    out.homogeneous_basis = H
    return out
