"""Multi-indices, monomial orderings and weight vectors.

Monomials are plain tuples of non-negative ints.  Orderings are immutable
objects exposing ``key(alpha)``, a tuple that sorts exactly like the
ordering, so ``max(support, key=order.key)`` gives the leading monomial.
"""

from __future__ import annotations

import itertools
from enum import IntEnum
from math import isqrt
from typing import Iterable, Sequence

from .errors import DimensionError, ParseError

MultiIndex = tuple


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check_same(a, b):
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def degree(a: Sequence[int]) -> int:
    return sum(a)


def add(a, b):
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    """a - b; caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    _check_same(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def unit(n: int, i: int):
    e = [0] * n
    e[i] = 1
    return tuple(e)


def minimal_generators(F: Iterable[MultiIndex]) -> set:
    """Divisibility-minimal elements of F (the minimal generators of the ideal)."""
    elems = sorted(set(F), key=lambda a: (sum(a), a))
    out = []
    for a in elems:
        if not any(divides(m, a) for m in out):
            out.append(a)
    return set(out)


def monomials_of_degree(n: int, d: int):
    """All multi-indices of length n and total degree d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to(n: int, d: int):
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)


class MonomialOrdering:
    """Base class; subclasses define ``key``."""

    def key(self, a):
        raise NotImplementedError

    def compare(self, a, b) -> Cmp:
        _check_same(a, b)
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Cmp.LT
        if ka > kb:
            return Cmp.GT
        return Cmp.EQ

    def le(self, a, b) -> bool:
        return self.compare(a, b) <= 0

    def is_degree_compatible(self, n: int) -> bool:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def _ident(self):
        return (type(self).__name__,)

    def __eq__(self, other):
        return isinstance(other, MonomialOrdering) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"ordering({self.to_json()!r})"


class Lex(MonomialOrdering):
    """Lexicographic: the first coordinate dominates."""

    def key(self, a):
        return tuple(a)

    def is_degree_compatible(self, n):
        return n <= 1

    def to_json(self):
        return "lex"


class DegLex(MonomialOrdering):
    def key(self, a):
        return (sum(a), tuple(a))

    def is_degree_compatible(self, n):
        return True

    def to_json(self):
        return "deglex"


class Weight(MonomialOrdering):
    """Compare by a positive weight vector, break ties with ``tie``."""

    def __init__(self, weights: Sequence[int], tie: MonomialOrdering | None = None):
        weights = tuple(int(w) for w in weights)
        if not weights or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive integers")
        self.weights = weights
        self.tie = tie or Lex()

    def key(self, a):
        if len(a) != len(self.weights):
            raise DimensionError("weight vector length differs from monomial length")
        return (sum(w * x for w, x in zip(self.weights, a)), self.tie.key(a))

    def is_degree_compatible(self, n):
        return len(set(self.weights)) == 1

    def to_json(self):
        return {"weight": list(self.weights), "tie": self.tie.to_json()}

    def _ident(self):
        return ("Weight", self.weights, self.tie._ident())


class Product(MonomialOrdering):
    """Lexicographic product: compare the first ``split`` coordinates, then the rest."""

    def __init__(self, left: MonomialOrdering, right: MonomialOrdering, split: int):
        self.left = left
        self.right = right
        self.split = int(split)

    def key(self, a):
        k = self.split
        return (self.left.key(a[:k]), self.right.key(a[k:]))

    def is_degree_compatible(self, n):
        if self.split >= n:
            return self.left.is_degree_compatible(n)
        if self.split == 0:
            return self.right.is_degree_compatible(n)
        return False

    def to_json(self):
        return {"product": [self.left.to_json(), self.right.to_json()], "split": self.split}

    def _ident(self):
        return ("Product", self.left._ident(), self.right._ident(), self.split)


class Opposite(MonomialOrdering):
    """a <=op b iff reversed(a) <= reversed(b)."""

    def __init__(self, inner: MonomialOrdering):
        self.inner = inner

    def key(self, a):
        return self.inner.key(tuple(reversed(a)))

    def is_degree_compatible(self, n):
        return self.inner.is_degree_compatible(n)

    def to_json(self):
        return {"opposite": self.inner.to_json()}

    def _ident(self):
        return ("Opposite", self.inner._ident())


def opposite_ordering(order: MonomialOrdering) -> MonomialOrdering:
    if isinstance(order, Opposite):
        return order.inner
    return Opposite(order)


def ordering_from_json(obj) -> MonomialOrdering:
    """Parse the literal forms used in algebra files and on the command line."""
    if isinstance(obj, MonomialOrdering):
        return obj
    if isinstance(obj, str):
        if obj == "lex":
            return Lex()
        if obj == "deglex":
            return DegLex()
        raise ParseError(f"unknown ordering {obj!r}")
    if isinstance(obj, dict):
        if "weight" in obj:
            return Weight(obj["weight"], ordering_from_json(obj.get("tie", "lex")))
        if "product" in obj:
            left, right = obj["product"]
            return Product(ordering_from_json(left), ordering_from_json(right), obj["split"])
        if "opposite" in obj:
            return opposite_ordering(ordering_from_json(obj["opposite"]))
    raise ParseError(f"cannot parse ordering {obj!r}")


def weight(omega: Sequence[int], a: Sequence[int]) -> int:
    return sum(w * x for w, x in zip(omega, a))


def weight_norm_bound(d: int, n: int) -> int:
    """Largest integer not exceeding 2d(N+1)N^(N/2); the radical is handled exactly."""
    base = 2 * d * (n + 1)
    if n % 2 == 0:
        return base * n ** (n // 2)
    # floor(base * n^((n-1)/2) * sqrt(n)) == isqrt(base^2 * n^(n-1) * n)
    return isqrt(base * base * n ** n)


def weight_agrees(order: MonomialOrdering, omega: Sequence[int], d: int, n: int) -> bool:
    """Does wt_omega reproduce ``order`` on all monomials of degree <= d?"""
    mons = sorted(monomials_up_to(n, d), key=order.key)
    weights = [weight(omega, m) for m in mons]
    return all(x < y for x, y in zip(weights, weights[1:]))


def approx_weight_vector(order: MonomialOrdering, d: int, n: int) -> tuple:
    """Smallest-norm positive weight vector agreeing with ``order`` up to degree d.

    Vectors are enumerated by increasing max-norm; existence inside the norm
    bound is guaranteed, so running out is an internal error.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    bound = weight_norm_bound(d, n)
    mons = sorted(monomials_up_to(n, d), key=order.key)
    for norm in range(1, bound + 1):
        for omega in itertools.product(range(1, norm + 1), repeat=n):
            if max(omega) != norm:
                continue
            ws = [weight(omega, m) for m in mons]
            if all(x < y for x, y in zip(ws, ws[1:])):
                return omega
    raise RuntimeError("no weight vector found within the norm bound")
