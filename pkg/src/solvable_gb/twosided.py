"""Two-sided ideals via the enveloping algebra A (x) A^op.

A two-sided ideal J of A is the image under mu(a (x) b) = a*b of the left
ideal of E = A (x) A^op generated by f_i (x) 1 and x_i (x) 1 - 1 (x) x_i.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Polynomial, SolvableAlgebra, _axpy, opposite, tensor
from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner_via_homogenization,
    is_groebner,
    normal_form,
    reduce_basis,
)


class EnvelopingContext:
    """E = A (x) A^op with variables (x_1 (x) 1, ..., x_N (x) 1, 1 (x) x_N, ..., 1 (x) x_1)."""

    def __init__(self, A: SolvableAlgebra):
        self.base = A
        self.op = opposite(A)
        names = list(A.names) + [nm + "_op" for nm in reversed(A.names)]
        self.E = tensor(A, self.op, names)
        self.n = A.n

    def left(self, a: Polynomial) -> Polynomial:
        """a (x) 1."""
        z = (0,) * self.n
        return Polynomial(self.E, {m + z: c for m, c in a.terms.items()}, _clean=True)

    def right(self, b: Polynomial) -> Polynomial:
        """1 (x) b, with b read in the opposite algebra (exponents reversed)."""
        z = (0,) * self.n
        return Polynomial(self.E, {z + m[::-1]: c for m, c in b.terms.items()}, _clean=True)

    def mu(self, h: Polynomial) -> Polynomial:
        self.E._check(h)
        A, n = self.base, self.n
        res = {}
        for m, c in h.terms.items():
            _axpy(res, c, A._mul_mono(m[:n], m[n:][::-1]))
        return Polynomial(A, res, _clean=True)


def lift_two_sided(ctx: EnvelopingContext, gens: Sequence[Polynomial]) -> list:
    out = [ctx.left(f) for f in gens]
    for i in range(ctx.n):
        x = ctx.base.var(i)
        out.append(ctx.left(x) - ctx.right(x))
    return out


def two_sided_groebner(A: SolvableAlgebra, gens: Sequence[Polynomial], method="direct") -> GroebnerBasis:
    """Reduced Groebner basis of the two-sided ideal generated by ``gens``.

    The left basis in E is computed directly or, with
    ``method="homogenized"``, through the Rees algebra of E; the images under
    mu are then reduced as a left ideal of A.  ``extras['mu_images']`` keeps
    the unreduced images.
    """
    ctx = EnvelopingContext(A)
    lifted = lift_two_sided(ctx, gens)
    if method == "homogenized":
        GE = groebner_via_homogenization(lifted)
    else:
        GE = buchberger(lifted)
    images = [g for g in (ctx.mu(h) for h in GE.elements) if g]
    if not images:
        out = GroebnerBasis(A, [], True, list(gens))
    else:
        out = reduce_basis(buchberger(images, algebra=A))
        out.gens = list(gens)
    out.extras["mu_images"] = images
    out.extras["enveloping_basis"] = GE
    out.extras["two_sided"] = is_two_sided_gb(A, out.elements)
    return out


def is_two_sided_gb(A: SolvableAlgebra, G) -> bool:
    """G is a left GB and g * x_i lies in the left ideal (G) for all g, i."""
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    if not elems:
        return True
    if not is_groebner(elems):
        return False
    xs = A.gens()
    return all(not normal_form(elems, g * x).remainder for g in elems for x in xs)
