"""Algebras of solvable type and their polynomials.

An algebra is fixed by variable names, a monomial ordering and, for each
pair i < j, the commutation rule  x_j x_i = c_ij x_i x_j + p_ij  with
lm(p_ij) < x_i x_j.  Elements are kept in PBW normal form: a dict mapping
exponent tuples to nonzero coefficients.

Indices are 0-based internally; messages report 1-based pairs.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import monomials as mono
from .errors import AlgebraMismatch, SemanticError, ValidationError
from .fields import QQ
from .monomials import DegLex, Lex, MonomialOrdering, Product, opposite_ordering


def _axpy(acc: dict, scale, terms: Mapping):
    """acc += scale * terms, dropping cancelled entries."""
    for m, c in terms.items():
        v = acc.get(m)
        v = scale * c if v is None else v + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


class SolvableAlgebra:
    """A validated commutation system together with a monomial ordering.

    ``relations`` maps 0-based pairs (i, j), i < j, to ``(c_ij, p_ij)`` where
    p_ij is a dict of terms.  Pairs that are left out commute.
    """

    def __init__(
        self,
        names: Sequence[str],
        order: MonomialOrdering | None = None,
        relations: Mapping | None = None,
        field=QQ,
    ):
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise ValidationError("variable names must be distinct")
        self.order = order if order is not None else DegLex()
        self.field = field
        self._c = {}
        self._p = {}
        for (i, j), (c, p) in (relations or {}).items():
            if not (0 <= i < j < self.n):
                raise ValidationError(f"bad relation pair ({i + 1},{j + 1})", (i + 1, j + 1))
            c = field(c)
            terms = {}
            for a, v in dict(p).items():
                a = tuple(a)
                if len(a) != self.n:
                    raise ValidationError(
                        f"relation ({i + 1},{j + 1}) has a monomial of wrong length", (i + 1, j + 1)
                    )
                v = field(v)
                if v:
                    terms[a] = v
            if c == field.one and not terms:
                continue
            self._c[(i, j)] = c
            self._p[(i, j)] = terms
        self._keycache = {}
        self._memo = {}
        self._gen_memo = {}
        self._validate()
        self.semi_commutative = all(not p for p in self._p.values())
        self.commutative = not self._c
        self.quadric = all(
            max((sum(a) for a in p), default=0) <= 2 for p in self._p.values()
        )
        self.homogeneous = all(
            all(sum(a) == 2 for a in p) for p in self._p.values()
        )
        self._derived = {}

    # -- validation -------------------------------------------------------

    def _validate(self):
        for (i, j), c in self._c.items():
            if not c:
                raise ValidationError(f"c_{i + 1}{j + 1} is zero", (i + 1, j + 1))
            p = self._p[(i, j)]
            if p:
                top = max(p, key=self.key)
                xij = mono.add(mono.unit(self.n, i), mono.unit(self.n, j))
                if not self.key(top) < self.key(xij):
                    raise ValidationError(
                        f"lm(p_{i + 1}{j + 1}) is not below x_{i + 1}x_{j + 1}", (i + 1, j + 1)
                    )

    def associativity_defects(self) -> list:
        """Triples (i, j, k), 1-based, where (x_k x_j) x_i != x_k (x_j x_i).

        Empty exactly when the rewriting rules are confluent, i.e. the
        ordered monomials really are a basis.
        """
        bad = []
        xs = [self.var(i) for i in range(self.n)]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for k in range(j + 1, self.n):
                    if (xs[k] * xs[j]) * xs[i] != xs[k] * (xs[j] * xs[i]):
                        bad.append((i + 1, j + 1, k + 1))
        return bad

    def relation(self, i: int, j: int):
        """(c_ij, p_ij as Polynomial) for 0-based i < j."""
        c = self._c.get((i, j), self.field.one)
        return c, Polynomial(self, dict(self._p.get((i, j), {})), _clean=True)

    def relations(self) -> dict:
        return {k: (self._c[k], dict(self._p[k])) for k in self._c}

    @property
    def flags(self) -> dict:
        return {
            "quadric": self.quadric,
            "homogeneous": self.homogeneous,
            "commutative": self.commutative,
            "semi_commutative": self.semi_commutative,
        }

    # -- identity ---------------------------------------------------------

    def _ident(self):
        rels = tuple(
            sorted((k, self._c[k], tuple(sorted(self._p[k].items()))) for k in self._c)
        )
        return (self.names, self.order, self.field, rels)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, SolvableAlgebra) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"SolvableAlgebra({', '.join(self.names)}; {self.order.to_json()})"

    # -- ordering ---------------------------------------------------------

    def key(self, a):
        k = self._keycache.get(a)
        if k is None:
            k = self.order.key(a)
            self._keycache[a] = k
        return k

    def lm_of(self, terms: Mapping):
        return max(terms, key=self.key)

    # -- construction helpers --------------------------------------------

    @property
    def zero_index(self):
        return (0,) * self.n

    def zero(self) -> "Polynomial":
        return Polynomial(self, {}, _clean=True)

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.zero_index: self.field.one}, _clean=True)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_index: self.field(c)})

    def monomial(self, a, c=1) -> "Polynomial":
        a = tuple(a)
        if len(a) != self.n:
            raise mono.DimensionError("monomial length differs from variable count")
        return Polynomial(self, {a: self.field(c)})

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        return Polynomial(self, {mono.unit(self.n, i): self.field.one}, _clean=True)

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def poly(self, text: str) -> "Polynomial":
        from .parsing import parse_poly

        return parse_poly(self, text)

    def polys(self, text: str) -> list:
        from .parsing import parse_poly_list

        return parse_poly_list(self, text)

    def from_terms(self, terms: Mapping) -> "Polynomial":
        return Polynomial(self, {tuple(a): self.field(c) for a, c in terms.items()})

    # -- multiplication core ---------------------------------------------

    def _mul_gen_left(self, k: int, b: tuple) -> dict:
        """Normal form of x_k * x^b."""
        key = (k, b)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        i = next((idx for idx, e in enumerate(b) if e), self.n)
        if i >= k:
            res = {b[:k] + (b[k] + 1,) + b[k + 1:]: self.field.one}
        else:
            b1 = b[:i] + (b[i] - 1,) + b[i + 1:]
            c = self._c.get((i, k), self.field.one)
            res = {}
            # c * x_i * (x_k * x^b1) + p_ik * x^b1
            for g, co in self._mul_gen_left(k, b1).items():
                _axpy(res, c * co, self._mul_gen_left(i, g))
            for delta, pc in self._p.get((i, k), {}).items():
                _axpy(res, pc, self._mul_mono(delta, b1))
        self._gen_memo[key] = res
        return res

    def _mul_mono(self, a: tuple, b: tuple) -> dict:
        """Normal form of x^a * x^b as a term dict (shared; do not mutate)."""
        key = (a, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.commutative:
            res = {tuple(x + y for x, y in zip(a, b)): self.field.one}
        elif self.semi_commutative:
            c = self.field.one
            for (i, j), cij in self._c.items():
                e = a[j] * b[i]
                if e:
                    c = c * cij ** e
            res = {tuple(x + y for x, y in zip(a, b)): c}
        else:
            j = max((idx for idx, e in enumerate(a) if e), default=-1)
            i = next((idx for idx, e in enumerate(b) if e), self.n)
            if j <= i:
                res = {tuple(x + y for x, y in zip(a, b)): self.field.one}
            else:
                a1 = a[:j] + (a[j] - 1,) + a[j + 1:]
                res = {}
                for g, co in self._mul_gen_left(j, b).items():
                    _axpy(res, co, self._mul_mono(a1, g))
        self._memo[key] = res
        return res

    def multiply_monomials(self, a, b) -> "Polynomial":
        a, b = tuple(a), tuple(b)
        if len(a) != self.n or len(b) != self.n:
            raise mono.DimensionError("monomial length differs from variable count")
        return Polynomial(self, dict(self._mul_mono(a, b)), _clean=True)

    def mul_terms(self, f: Mapping, g: Mapping) -> dict:
        res = {}
        for a, ca in f.items():
            for b, cb in g.items():
                _axpy(res, ca * cb, self._mul_mono(a, b))
        return res

    def mono_times(self, a: tuple, g: Mapping, scale=None) -> dict:
        """x^a * g (optionally scaled) as a fresh term dict."""
        res = {}
        for b, cb in g.items():
            _axpy(res, cb if scale is None else scale * cb, self._mul_mono(a, b))
        return res

    def multiply(self, f: "Polynomial", g: "Polynomial") -> "Polynomial":
        self._check(f)
        self._check(g)
        return Polynomial(self, self.mul_terms(f.terms, g.terms), _clean=True)

    def _check(self, f):
        if f.algebra is not self and f.algebra != self:
            raise AlgebraMismatch("polynomial belongs to a different algebra")

    # -- printing ---------------------------------------------------------

    def format(self, f: "Polynomial") -> str:
        from .parsing import format_poly

        return format_poly(f)


class Polynomial:
    """Immutable element of a solvable algebra in PBW normal form."""

    __slots__ = ("algebra", "terms", "_lm")

    def __init__(self, algebra: SolvableAlgebra, terms: Mapping | None = None, _clean=False):
        self.algebra = algebra
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {tuple(a): c for a, c in terms.items() if c}
        self.terms = terms
        self._lm = None

    # -- leading data -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = self.algebra.lm_of(self.terms)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    @property
    def deg(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def support(self) -> list:
        """Monomials in descending order."""
        return sorted(self.terms, key=self.algebra.key, reverse=True)

    def items(self):
        return [(a, self.terms[a]) for a in self.support()]

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self.terms}) <= 1

    def homogeneous_component(self, k: int) -> "Polynomial":
        return Polynomial(self.algebra, {a: c for a, c in self.terms.items() if sum(a) == k}, _clean=True)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.algebra.field.one / self.lc
        return Polynomial(self.algebra, {a: c * inv for a, c in self.terms.items()}, _clean=True)

    def coefficient(self, a):
        return self.terms.get(tuple(a), self.algebra.field.zero)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.algebra._check(other)
            return other
        try:
            return self.algebra.constant(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        res = dict(self.terms)
        _axpy(res, self.algebra.field.one, o.terms)
        return Polynomial(self.algebra, res, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.algebra, {a: -c for a, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        res = dict(self.terms)
        _axpy(res, -self.algebra.field.one, o.terms)
        return Polynomial(self.algebra, res, _clean=True)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = self.algebra.field(c)
        if not c:
            return self.algebra.zero()
        return Polynomial(self.algebra, {a: c * v for a, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.algebra.multiply(self, other)
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __rmul__(self, other):
        # only scalars reach here
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __pow__(self, k: int):
        res = self.algebra.one()
        for _ in range(k):
            res = res * self
        return res

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (other.algebra is self.algebra or other.algebra == self.algebra) and other.terms == self.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"Polynomial({self})"


# -- presets ---------------------------------------------------------------


def _default_names(n: int) -> list:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def commutative(n: int, order: MonomialOrdering | None = None, names=None, field=QQ) -> SolvableAlgebra:
    return SolvableAlgebra(names or _default_names(n), order, {}, field)


def weyl(n: int, order: MonomialOrdering | None = None, field=QQ) -> SolvableAlgebra:
    """Weyl algebra with variables x1..xn, d1..dn (x, d when n = 1)."""
    if n == 1:
        names = ["x", "d"]
    else:
        names = [f"x{i + 1}" for i in range(n)] + [f"d{i + 1}" for i in range(n)]
    one = {(0,) * (2 * n): 1}
    rels = {(i, n + i): (1, one) for i in range(n)}
    return SolvableAlgebra(names, order, rels, field)


def lie(n: int, brackets: Mapping, order: MonomialOrdering | None = None, names=None, field=QQ) -> SolvableAlgebra:
    """Enveloping algebra of a Lie algebra given by ``brackets``.

    ``brackets`` maps 1-based (j, i) to the bracket [x_j, x_i] as a term dict
    over linear (or constant) monomials.  The rule used is
    x_j x_i = x_i x_j - [x_j, x_i].  The Jacobi identity is not checked.
    """
    rels = {}
    for (j, i), terms in brackets.items():
        sign = 1
        if j < i:
            i, j, sign = j, i, -1
        if i == j:
            continue
        rels[(i - 1, j - 1)] = (1, {tuple(a): -sign * field(c) for a, c in dict(terms).items()})
    return SolvableAlgebra(names or [f"x{k + 1}" for k in range(n)], order, rels, field)


# -- constructions ---------------------------------------------------------


def validate(names, order, relations, field=QQ) -> SolvableAlgebra:
    """Build an algebra or raise ValidationError naming the offending pair."""
    return SolvableAlgebra(names, order, relations, field)


def opposite(A: SolvableAlgebra) -> SolvableAlgebra:
    """Opposite algebra on the reversed variable tuple.

    The monomial with exponent a in the opposite algebra is x^(reversed a) in A.
    """
    if "opposite" in A._derived:
        return A._derived["opposite"]
    n = A.n
    rels = {}
    for (I, J), c in A._c.items():
        i, j = n - 1 - J, n - 1 - I
        rels[(i, j)] = (c, {a[::-1]: v for a, v in A._p[(I, J)].items()})
    B = SolvableAlgebra(A.names[::-1], opposite_ordering(A.order), rels, A.field)
    A._derived["opposite"] = B
    B._derived["opposite"] = A
    return B


def tensor(A: SolvableAlgebra, B: SolvableAlgebra, names=None) -> SolvableAlgebra:
    if A.field != B.field:
        raise SemanticError("tensor factors have different coefficient fields")
    na, nb = A.n, B.n
    if names is None:
        used = set(A.names)
        names = list(A.names)
        for nm in B.names:
            while nm in used:
                nm = nm + "_r"
            used.add(nm)
            names.append(nm)
    zb, za = (0,) * nb, (0,) * na
    rels = {}
    for (i, j), c in A._c.items():
        rels[(i, j)] = (c, {a + zb: v for a, v in A._p[(i, j)].items()})
    for (i, j), c in B._c.items():
        rels[(na + i, na + j)] = (c, {za + b: v for b, v in B._p[(i, j)].items()})
    return SolvableAlgebra(names, Product(A.order, B.order, na), rels, A.field)


def rees(A: SolvableAlgebra) -> SolvableAlgebra:
    """Homogenization with a central variable t (placed last)."""
    if "rees" in A._derived:
        return A._derived["rees"]
    if not A.quadric:
        raise SemanticError("homogenization needs a quadric algebra")
    tname = "t"
    while tname in A.names:
        tname += "0"
    rels = {}
    for (i, j), c in A._c.items():
        rels[(i, j)] = (c, {a + (2 - sum(a),): v for a, v in A._p[(i, j)].items()})
    R = SolvableAlgebra(list(A.names) + [tname], Product(A.order, Lex(), A.n), rels, A.field)
    R._derived["base"] = A
    A._derived["rees"] = R
    return R


def homogenize_poly(A: SolvableAlgebra, f: Polynomial) -> Polynomial:
    A._check(f)
    R = rees(A)
    d = f.deg
    return Polynomial(R, {a + (d - sum(a),): c for a, c in f.terms.items()}, _clean=True)


def dehomogenize_poly(R: SolvableAlgebra, h: Polynomial) -> Polynomial:
    R._check(h)
    A = R._derived.get("base")
    if A is None:
        raise SemanticError("not a homogenization algebra")
    res = {}
    for a, c in h.terms.items():
        _axpy(res, c, {a[:-1]: A.field.one})
    return Polynomial(A, res, _clean=True)


def associated_graded(A: SolvableAlgebra) -> SolvableAlgebra:
    if "graded" in A._derived:
        return A._derived["graded"]
    if not A.quadric:
        raise SemanticError("associated graded algebra needs a quadric algebra")
    rels = {}
    for (i, j), c in A._c.items():
        rels[(i, j)] = (c, {a: v for a, v in A._p[(i, j)].items() if sum(a) == 2})
    G = SolvableAlgebra(A.names, A.order, rels, A.field)
    A._derived["graded"] = G
    return G


def top_form(A: SolvableAlgebra, f: Polynomial) -> Polynomial:
    A._check(f)
    if not f:
        raise ValueError("top form of zero")
    d = f.deg
    return Polynomial(associated_graded(A), {a: c for a, c in f.terms.items() if sum(a) == d}, _clean=True)


def change_algebra(f: Polynomial, B: SolvableAlgebra) -> Polynomial:
    """Reinterpret the same coefficient map over another algebra with N variables."""
    return Polynomial(B, dict(f.terms), _clean=True)
