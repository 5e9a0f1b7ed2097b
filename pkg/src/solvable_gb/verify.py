"""Run every degree bound and structural identity on one concrete instance.

Each check is recorded as a :class:`Check`; ``Report.ok`` is false as soon
as one check fails.  The bounds are proven upper bounds, so a failed
bound points at an implementation bug rather than at the instance.
"""

from __future__ import annotations

import random
import time
from math import comb
from dataclasses import dataclass, field
from typing import Sequence

from . import bounds
from .algebra import SolvableAlgebra, top_form
from .cones import (
    _poly_add,
    _trim,
    binom_poly,
    decompose_homogeneous_ideal,
    degree_of,
    hilbert_from_decomposition,
    hilbert_function,
    hilbert_polynomial_from_cones,
    hilbert_polynomial_from_macaulay,
    is_d_standard,
    make_exact,
    plus_part,
    shift_standard,
    split_complement,
    truncate_gb,
)
from .groebner import (
    check_combination,
    groebner,
    groebner_via_homogenization,
    hilbert_function_quotient,
    is_groebner,
    membership,
)
from .syzygy import syzygies_of_tuple
from .twosided import two_sided_groebner


@dataclass
class Check:
    name: str
    ok: bool
    value: object = None
    bound: object = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        parts = [f"{status} {self.name}"]
        if self.value is not None or self.bound is not None:
            parts.append(f"value={self.value} bound={self.bound}")
        if self.detail:
            parts.append(self.detail)
        return "  ".join(parts)


@dataclass
class Report:
    name: str = ""
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def violations(self) -> list:
        return [c for c in self.checks if not c.ok]

    def add(self, name, ok, value=None, bound=None, detail=""):
        self.checks.append(Check(name, bool(ok), value, bound, detail))

    def get(self, name) -> Check | None:
        return next((c for c in self.checks if c.name == name), None)

    def lines(self) -> list:
        return [f"[{self.name}] {c.line()}" for c in self.checks]


@dataclass
class VerifyOptions:
    membership_samples: int = 2
    two_sided: bool = True
    two_sided_max_vars: int = 2
    hilbert_degree: int = 10
    seed: int = 0
    canonicity: bool = True


def _random_member(A, gens, rng):
    total = A.zero()
    for g in gens:
        k = rng.randint(0, 2)
        if k == 0:
            continue
        i = rng.randrange(A.n)
        coef = rng.choice([1, -1, 2])
        r = A.var(i).scale(coef) if k == 2 else A.constant(coef)
        total = total + r * g
    return total


def verify_instance(A: SolvableAlgebra, gens: Sequence, options: VerifyOptions | None = None, name="") -> Report:
    opts = options or VerifyOptions()
    rep = Report(name)
    start = time.perf_counter()
    gens = [g for g in gens if g]
    if not gens:
        rep.add("vacuous", True, detail="no nonzero generators")
        rep.seconds = time.perf_counter() - start
        return rep
    n = A.n
    d = max(g.deg for g in gens)
    dc = A.order.is_degree_compatible(n)
    homogeneous = A.homogeneous and all(g.is_homogeneous() for g in gens)

    G = groebner(gens, certificates=True)
    rep.add("gb:criterion", is_groebner(G))
    rep.add(
        "certificate:gb",
        all(check_combination(gens, row, g) for g, row in zip(G.elements, G.certificates)),
    )
    gdeg = G.max_degree

    if opts.canonicity:
        rng = random.Random(opts.seed)
        shuffled = [g.scale(rng.choice([2, -3, rng.randint(1, 5)])) for g in gens]
        rng.shuffle(shuffled)
        G2 = groebner(shuffled)
        rep.add("gb:canonical", [g.terms for g in G2.elements] == [g.terms for g in G.elements])

    if A.quadric:
        b = bounds.reduced_gb_bound(n, d, dc)
        rep.add("bound:reduced-gb", gdeg <= b, gdeg, b)
        H = groebner_via_homogenization(gens, certificates=True)
        Dnd = bounds.dube_bound(n, d)
        hdeg = max(H.homogeneous_basis.max_degree, H.max_degree)
        rep.add("bound:dehomogenized-gb", hdeg <= Dnd, hdeg, Dnd)
        rep.add("gb:dehomogenized-criterion", is_groebner(H))
        rep.add(
            "certificate:dehomogenized-gb",
            all(check_combination(gens, row, g) for g, row in zip(H.elements, H.certificates)),
        )
        if dc:
            tops = [top_form(A, g) for g in G.elements]
            rep.add("li-wu:graded-gb", is_groebner(tops))

    # membership certificates
    rng = random.Random(opts.seed + 1)
    samples = list(gens[:2]) + [_random_member(A, gens, rng) for _ in range(opts.membership_samples)]
    ok_id, ok_bd, worst = True, True, None
    for f in samples:
        if not f:
            continue
        res = membership(gens, f, method="homogenized" if A.quadric else "direct")
        if not res.member or not check_combination(gens, res.cofactors, f):
            ok_id = False
            continue
        ydeg = max((y.deg for y in res.cofactors), default=-1)
        if A.quadric:
            bd = bounds.membership_bound(n, d, f.deg, dc)
            if not ydeg <= bd:
                ok_bd = False
            if worst is None or ydeg > worst[0]:
                worst = (ydeg, bd)
    rep.add("certificate:membership", ok_id)
    if A.quadric and worst is not None:
        rep.add("bound:membership", ok_bd, worst[0], worst[1])

    # syzygies
    syz = syzygies_of_tuple(gens, method="direct")
    rep.add("certificate:syzygy-direct", syz.check())
    if A.quadric:
        syzh = syzygies_of_tuple(gens, method="homogenized")
        rep.add("certificate:syzygy", syzh.check())
        sb = bounds.syzygy_bound(n, d)
        rep.add("bound:syzygy", syzh.max_degree <= sb, syzh.max_degree, sb)

    # cone decomposition of the normal-form space
    lms = [g.lm for g in G.elements]
    P, Q = split_complement(lms, n)
    rep.add("split:q-standard", is_d_standard(Q) == 0, is_d_standard(Q), 0)
    T = truncate_gb(G, Q)
    rep.add("split:truncated-gb", is_groebner(T), len(T.elements), len(G.elements))
    Qx, bq = make_exact(Q, n)
    Qy, bq2 = make_exact(split_complement(lms, n, "greatest")[1], n, "greatest")
    rep.add("macaulay:invariance", bq.b == bq2.b, bq.b, bq2.b)
    if homogeneous or dc:
        rep.add("bound:b0", gdeg <= bq[0], gdeg, bq[0])

    if homogeneous:
        hb = bounds.homogeneous_gb_bound(n, d)
        rep.add("bound:homogeneous-gb", gdeg <= hb, gdeg, hb)
        dmax = opts.hilbert_degree
        hq = hilbert_from_decomposition(Q, n, dmax)
        direct = [hilbert_function_quotient(G, k) for k in range(dmax + 1)]
        rep.add("hilbert:nf", list(hq.table) == direct)
        hx = hilbert_from_decomposition(Qx, n, dmax)
        rep.add(
            "hilbert:closed-forms",
            hx.macaulay_polynomial == hx.polynomial and hx.table == hq.table,
        )
        rep.add("hilbert:regularity-b0", hx.sigma == bq[0], hx.sigma, bq[0])

        dec = decompose_homogeneous_ideal(gens)
        Ex, a = make_exact(dec.rest, n, d=d)
        ideal_cones = [dec.principal] + Ex
        rep.add(
            "hilbert:ideal-complement",
            all(hilbert_function(ideal_cones, k) + direct[k] == comb(n + k - 1, k) for k in range(dmax + 1)),
        )
        # both sides d-standard, as in the estimate a_j + b_j <= D(N-j, d)
        Qd, bd = make_exact(shift_standard(Q, d), n, d=d)
        if n >= 2:
            ok = all(a[j] + bd[j] <= bounds.dube_bound(n - j, d) for j in range(1, n))
            rep.add("bound:macaulay-a1-b1", ok, a[1] + bd[1], bounds.dube_bound(n - 1, d))
        total = _poly_add(hilbert_polynomial_from_cones(ideal_cones), hilbert_polynomial_from_macaulay(bd.b, n))
        rep.add("hilbert:complementary-polynomials", _trim(total) == _trim(binom_poly(n - 1, n - 1)))
        lhs = max(_deg(ideal_cones), _deg(Qd))
        rhs = max(_deg(plus_part(ideal_cones)), _deg(plus_part(Qd)))
        rep.add("macaulay:top-degree", lhs == rhs, lhs, rhs)

    if opts.two_sided and A.quadric and n <= opts.two_sided_max_vars:
        TS = two_sided_groebner(A, gens)
        rep.add("two-sided:closure", TS.extras["two_sided"])
        TSh = two_sided_groebner(A, gens, method="homogenized")
        tb = bounds.two_sided_bound(n, d)
        tdeg = max((g.deg for g in TSh.extras["mu_images"]), default=-1)
        rep.add("bound:two-sided", tdeg <= tb, tdeg, tb)
        rep.add("two-sided:routes-agree", [g.terms for g in TSh] == [g.terms for g in TS])
        if dc:
            rep.add("bound:two-sided-reduced", TS.max_degree <= tb, TS.max_degree, tb)

    rep.seconds = time.perf_counter() - start
    return rep


def _deg(cones):
    v = degree_of(cones)
    return -1 if v is None else v
