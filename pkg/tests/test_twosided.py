import random

import pytest

from conftest import PRESETS, nonabelian2, random_poly
from solvable_gb.algebra import commutative, weyl
from solvable_gb.groebner import groebner
from solvable_gb.twosided import (
    EnvelopingContext,
    is_two_sided_gb,
    lift_two_sided,
    two_sided_groebner,
)


def closure_oracle(A, gens):
    """Saturate a left basis under right multiplication by the variables."""
    G = groebner(gens)
    while True:
        extra = [G.normal_form(g * x) for g in G for x in A.gens()]
        extra = [e for e in extra if e]
        if not extra:
            return G
        G = groebner(list(G) + extra)


def strs(G):
    return [str(g) for g in G]


def test_nonabelian_example():
    U = nonabelian2()
    J = two_sided_groebner(U, U.polys("x1"))
    assert strs(J) == ["x1"]
    assert is_two_sided_gb(U, J)


def test_weyl_algebra_is_simple():
    A = weyl(1)
    assert strs(two_sided_groebner(A, A.polys("x^2"))) == ["1"]


def test_left_ideal_need_not_be_two_sided():
    U = nonabelian2()
    # x2 * x1 = x1 * x2 - x1, so (x2) is not closed on the right
    assert not is_two_sided_gb(U, groebner(U.polys("x2")))
    assert is_two_sided_gb(U, [])


@pytest.mark.parametrize("name", ["commutative2", "nonabelian2", "sl2", "heisenberg", "weyl1", "quadric3"])
def test_matches_closure_oracle(name):
    A = PRESETS[name]
    rng = random.Random(41)
    for _ in range(2):
        gens = [g for g in (random_poly(rng, A, 2, terms=2) for _ in range(2)) if g]
        J = two_sided_groebner(A, gens)
        assert strs(J) == strs(closure_oracle(A, gens))
        assert J.extras["two_sided"]


@pytest.mark.parametrize("name", ["nonabelian2", "sl2", "weyl1"])
def test_routes_agree(name):
    A = PRESETS[name]
    rng = random.Random(42)
    gens = [random_poly(rng, A, 2, terms=2) + A.var(0)]
    assert strs(two_sided_groebner(A, gens, "homogenized")) == strs(two_sided_groebner(A, gens))


def test_commutative_case_is_the_left_basis():
    A = commutative(2)
    gens = A.polys("x^2 - y, x*y - 1")
    assert strs(two_sided_groebner(A, gens)) == strs(groebner(gens))


@pytest.mark.parametrize("name", ["weyl1", "nonabelian2", "sl2", "quadric3"])
def test_mu_is_a_bimodule_map(name):
    A = PRESETS[name]
    ctx = EnvelopingContext(A)
    rng = random.Random(43)
    for _ in range(200):
        a, b, c = (random_poly(rng, A, 1, terms=2) for _ in range(3))
        h = ctx.left(c) * ctx.right(b)
        assert ctx.mu(h) == c * b
        assert ctx.mu(ctx.left(a) * h) == a * ctx.mu(h)
        assert ctx.mu(ctx.right(a) * h) == ctx.mu(h) * a


def test_lift_recipe():
    A = weyl(1)
    ctx = EnvelopingContext(A)
    lifted = lift_two_sided(ctx, A.polys("x^2"))
    assert len(lifted) == 1 + A.n
    assert [str(ctx.mu(h)) for h in lifted] == ["x^2", "0", "0"]
    assert ctx.E.names == ("x", "d", "d_op", "x_op")
