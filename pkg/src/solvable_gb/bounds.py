"""Closed-form degree bounds, evaluated exactly.

Values have the form  a + b * sqrt(s)  with rationals a, b >= 0 and a
positive integer s; the radical comes from the N^(N/2) factor for odd N.
Comparisons are decided by sign analysis over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_lin_sqrt(a, b, s) -> int:
    """sign(a + b*sqrt(s)) for rationals a, b and integer s >= 0."""
    sb = _sign(b) if s else 0
    sa = _sign(a)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb or sa
    # opposite signs: compare a^2 with b^2 s
    return sa * _sign(a * a - b * b * s)


def _squarefree_split(s: int):
    """s = k^2 * r with r squarefree."""
    k, r = 1, s
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            k *= p
        p += 1
    return k, r


@total_ordering
@dataclass(frozen=True)
class BoundValue:
    rational: Fraction
    radical_coeff: Fraction = Fraction(0)
    radicand: int = 1

    @staticmethod
    def of(a, b=0, s=1) -> "BoundValue":
        a, b = Fraction(a), Fraction(b)
        if b and s != 1:
            k, r = _squarefree_split(s)
            b, s = b * k, r
        if s == 1:
            a, b = a + b, Fraction(0)
        if not b:
            s = 1
        return BoundValue(a, b, s)

    def _diff_sign(self, other) -> int:
        """sign(self - other)."""
        if not isinstance(other, BoundValue):
            other = BoundValue.of(other)
        p = self.rational - other.rational
        q, s = self.radical_coeff, self.radicand
        r, t = other.radical_coeff, other.radicand
        if s == t:
            return _sign_lin_sqrt(p, q - r, s)
        # sign of u = q sqrt(s) - r sqrt(t), both terms nonnegative
        su = _sign(q * q * s - r * r * t)
        if p == 0:
            return su
        if su == 0 or _sign(p) == su:
            return _sign(p)
        # |p| versus |u|: p^2 - u^2 = (p^2 - q^2 s - r^2 t) + 2 q r sqrt(s t)
        c = _sign_lin_sqrt(p * p - q * q * s - r * r * t, 2 * q * r, s * t)
        if c == 0:
            return 0
        return _sign(p) if c > 0 else su

    def __eq__(self, other):
        return self._diff_sign(other) == 0

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __hash__(self):
        return hash((self.rational, self.radical_coeff, self.radicand))

    def __add__(self, other):
        if not isinstance(other, BoundValue):
            return BoundValue.of(self.rational + Fraction(other), self.radical_coeff, self.radicand)
        if other.radical_coeff and self.radical_coeff and other.radicand != self.radicand:
            raise ValueError("sums of different radicals are not supported")
        s = self.radicand if self.radical_coeff else other.radicand
        return BoundValue.of(
            self.rational + other.rational, self.radical_coeff + other.radical_coeff, s
        )

    def __mul__(self, k):
        k = Fraction(k)
        return BoundValue.of(self.rational * k, self.radical_coeff * k, self.radicand)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return not self.radical_coeff

    def floor(self) -> int:
        """Largest integer not exceeding the value (exact)."""
        if self.is_rational():
            return self.rational.numerator // self.rational.denominator
        # isqrt gives a lower estimate of b sqrt(s); walk up from just below it
        b, s = self.radical_coeff, self.radicand
        k = int(self.rational + isqrt(int(b * b * s))) - 2
        while BoundValue.of(k + 1) <= self:
            k += 1
        return k

    def __str__(self):
        a, b, s = self.rational, self.radical_coeff, self.radicand
        if not b:
            return str(a)
        rad = f"sqrt({s})" if b == 1 else f"{b}*sqrt({s})"
        return rad if a == 0 else f"{a} + {rad}"

    def __repr__(self):
        return f"BoundValue({self})"


def _check(n: int, d: int):
    if n < 1:
        raise ValueError("N must be at least 1")
    if d < 0:
        raise ValueError("d must be non-negative")


def dube_bound(n: int, d: int) -> BoundValue:
    """D(N, d) = 2 (d^2/2 + d)^(2^(N-1))."""
    _check(n, d)
    base = Fraction(d * d, 2) + d
    return BoundValue.of(2 * base ** (2 ** (n - 1)))


def _sqrt_power(n: int) -> BoundValue:
    """N^(N/2)."""
    if n % 2 == 0:
        return BoundValue.of(n ** (n // 2))
    return BoundValue.of(0, n ** ((n - 1) // 2), n)


def homogeneous_gb_bound(n: int, d: int) -> BoundValue:
    """D(N-1, d); for N = 1 every homogeneous ideal is principal and d itself is used."""
    if n == 1:
        _check(n, d)
        return BoundValue.of(d)
    return dube_bound(n - 1, d)


def reduced_gb_bound(n: int, d: int, degree_compatible: bool) -> BoundValue:
    if degree_compatible:
        return dube_bound(n, d)
    return _sqrt_power(n) * (2 * dube_bound(n + 1, d).rational * (n + 1))


def membership_bound(n: int, d: int, deg_f: int, degree_compatible: bool) -> BoundValue:
    D = dube_bound(n, d).rational
    if degree_compatible:
        return BoundValue.of(deg_f + D)
    return _sqrt_power(n) * (D * 2 * deg_f * (n + 1)) + D


def reduction_degree_bound(n: int, d: int, deg_f: int) -> BoundValue:
    return _sqrt_power(n) * (deg_f * 2 * d * (n + 1))


def weight_norm_bound(n: int, d: int) -> BoundValue:
    return _sqrt_power(n) * (2 * d * (n + 1))


def syzygy_bound(n: int, d: int) -> BoundValue:
    return dube_bound(n, d) * 3


def two_sided_bound(n: int, d: int) -> BoundValue:
    return dube_bound(2 * n, d)


FORMULAS = {
    "dube": lambda n, d, deg_f, dc: dube_bound(n, d),
    "homogeneous-gb": lambda n, d, deg_f, dc: homogeneous_gb_bound(n, d),
    "reduced-gb": lambda n, d, deg_f, dc: reduced_gb_bound(n, d, dc),
    "membership": lambda n, d, deg_f, dc: membership_bound(n, d, deg_f, dc),
    "reduction": lambda n, d, deg_f, dc: reduction_degree_bound(n, d, deg_f),
    "syzygy": lambda n, d, deg_f, dc: syzygy_bound(n, d),
    "two-sided": lambda n, d, deg_f, dc: two_sided_bound(n, d),
    "weight-norm": lambda n, d, deg_f, dc: weight_norm_bound(n, d),
}


def evaluate(formula: str, n: int, d: int, deg_f: int = 0, degree_compatible: bool = False) -> BoundValue:
    try:
        fn = FORMULAS[formula]
    except KeyError:
        raise ValueError(f"unknown formula {formula!r}; choose from {sorted(FORMULAS)}") from None
    return fn(n, d, deg_f, degree_compatible)
