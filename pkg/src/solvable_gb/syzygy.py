"""Left syzygies, colon ideals and the direct-sum splitting of an ideal."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Polynomial, dehomogenize_poly, homogenize_poly, rees
from .errors import SemanticError
from .groebner import (
    GroebnerBasis,
    _algebra_of,
    _s_data,
    groebner,
    normal_form,
)


def dot(v: Sequence[Polynomial], f: Sequence[Polynomial]) -> Polynomial:
    total = None
    for a, b in zip(v, f):
        term = a * b
        total = term if total is None else total + term
    return total


@dataclass
class SyzygyGenerators:
    tuple: list
    generators: list
    provenance: str = "gb-direct"

    def check(self) -> bool:
        return all(not dot(v, self.tuple) for v in self.generators)

    @property
    def max_degree(self) -> int:
        return max((c.deg for v in self.generators for c in v), default=-1)

    def __len__(self):
        return len(self.generators)


def syzygies_of_gb(G) -> SyzygyGenerators:
    """The syzygies s_ij, one per pair of basis elements."""
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    if not elems:
        return SyzygyGenerators([], [], "gb-direct")
    A = _algebra_of(elems)
    m = len(elems)
    rows = []
    for i in range(m):
        for j in range(i + 1, m):
            gi, gj = elems[i], elems[j]
            S, alpha, cf, beta, cg = _s_data(A, gi.terms, gi.lm, gj.terms, gj.lm)
            cert = normal_form(elems, Polynomial(A, S, _clean=True))
            if cert.remainder:
                raise SemanticError("input is not a Groebner basis")
            v = [-p for p in cert.cofactors]
            v[i] = v[i] + A.monomial(alpha, cf)
            v[j] = v[j] - A.monomial(beta, cg)
            if any(v):
                rows.append(v)
    return SyzygyGenerators(elems, rows, "gb-direct")


def _assemble(A, n, M_rows, Acert, Bcert):
    """Rows of M*Acert stacked on rows of I_n - Bcert*Acert."""
    rows = []
    for mrow in M_rows:
        v = [A.zero() for _ in range(n)]
        for k, mk in enumerate(mrow):
            if not mk:
                continue
            for l in range(n):
                a = Acert[k][l]
                if a:
                    v[l] = v[l] + mk * a
        rows.append(v)
    for i in range(n):
        v = [A.zero() for _ in range(n)]
        v[i] = A.one()
        for k, b in enumerate(Bcert[i]):
            if not b:
                continue
            for l in range(n):
                a = Acert[k][l]
                if a:
                    v[l] = v[l] - b * a
        rows.append(v)
    return rows


def syzygies_of_tuple(f: Sequence[Polynomial], method="direct") -> SyzygyGenerators:
    """Generators of Syz(f_1, ..., f_n).

    ``method="homogenized"`` runs the whole computation in the Rees algebra
    (homogeneous certificates) and dehomogenizes the rows; this is the route
    whose degrees the bound checks are stated for.
    """
    f = list(f)
    A = _algebra_of(f)
    n = len(f)
    if method == "homogenized":
        R = rees(A)
        hf = [homogenize_poly(A, g) if g else R.zero() for g in f]
        rows_h = _tuple_rows(R, hf)
        rows = [[dehomogenize_poly(R, c) for c in v] for v in rows_h]
        provenance = "transformed-homogenized"
    elif method == "direct":
        rows = _tuple_rows(A, f)
        provenance = "transformed"
    else:
        raise ValueError(f"unknown method {method!r}")
    rows = [v for v in rows if any(v)]
    return SyzygyGenerators(f, rows, provenance)


def _tuple_rows(A, f):
    n = len(f)
    if not any(f):
        return [[A.one() if k == i else A.zero() for k in range(n)] for i in range(n)]
    G = groebner(f, certificates=True, algebra=A)
    M = syzygies_of_gb(G).generators
    return _assemble(A, n, M, G.certificates, G.generator_certificates())


def colon_ideal(I_gens: Sequence[Polynomial], f: Polynomial) -> GroebnerBasis:
    """Reduced GB of (I : f) = {g : g f in I}."""
    if not f:
        raise ValueError("colon by zero")
    A = f.algebra
    I_gens = [g for g in I_gens if g]
    if not I_gens:
        return GroebnerBasis(A, [], True, [])
    syz = syzygies_of_tuple(I_gens + [f])
    last = [v[-1] for v in syz.generators if v[-1]]
    if not last:
        return GroebnerBasis(A, [], True, [])
    return groebner(last, algebra=A)


@dataclass
class IdealComponent:
    """generator * nf_G(R); G is None for the first, principal piece."""

    generator: Polynomial
    colon: GroebnerBasis | None = None
    cones: list = field(default_factory=list)

    @property
    def trivial(self) -> bool:
        return self.colon is not None and any(g.deg == 0 for g in self.colon)


def ideal_direct_decomposition(gens: Sequence[Polynomial]) -> list:
    """(f_1) + nf_{G_2}(R) f_2 + ... as a direct sum, G_i = ((f_1..f_{i-1}) : f_i)."""
    from .cones import split_complement

    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    out = [IdealComponent(gens[0])]
    for i in range(1, len(gens)):
        G = colon_ideal(gens[:i], gens[i])
        Q = split_complement([g.lm for g in G], gens[i].algebra.n)[1]
        out.append(IdealComponent(gens[i], G, Q))
    return out
