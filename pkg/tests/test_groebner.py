import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PRESETS, brute_rank, random_poly
from solvable_gb.algebra import associated_graded, commutative, rees, top_form, weyl
from solvable_gb.errors import SemanticError
from solvable_gb.fields import PrimeField
from solvable_gb.groebner import (
    BudgetExceeded,
    buchberger,
    check_combination,
    groebner,
    groebner_via_homogenization,
    hilbert_function_quotient,
    irreducible_monomial_basis,
    is_groebner,
    membership,
    normal_form,
    reduce_basis,
    s_polynomial,
)
from solvable_gb.monomials import DegLex, Lex, monomials_of_degree


def strs(G):
    return [str(g) for g in G]


def test_weyl2_example():
    W = weyl(2)
    G = groebner(W.polys("x1*d1, x2*d1^2 - d1"))
    assert strs(G) == ["d1"]
    assert G.reduced


def test_unit_ideal_in_weyl():
    A = weyl(1)
    assert strs(groebner(A.polys("d, x"))) == ["1"]


def test_lex_example_is_not_a_basis():
    A = commutative(2, Lex())
    gens = A.polys("x*y, x - y^2, x^2")
    check = is_groebner(gens)
    assert not check.ok
    assert str(check.witness) == "y^3"
    assert strs(groebner(gens)) == ["y^3", "x - y^2"]


def test_rees_remark_example():
    A = commutative(1)
    H = groebner_via_homogenization(A.polys("x^2, x + x^2"))
    assert sorted(strs(H.homogeneous_basis)) == ["x*t", "x^2"]
    assert sorted(strs(H)) == ["x", "x^2"]
    assert is_groebner(H)
    assert strs(reduce_basis(H)) == ["x"]


def test_s_polynomial_cancels_leading_terms():
    A = weyl(1)
    f, g = A.polys("x*d + 1, d^2")
    S = s_polynomial(f, g)
    # lcm(x*d, d^2) = x*d^2 cancels; what is left sits strictly below it
    assert not S or DegLex().key(S.lm) < DegLex().key((1, 2))


def test_empty_and_zero_inputs():
    assert is_groebner([])
    A = commutative(2)
    G = groebner([A.zero(), A.poly("x")])
    assert strs(G) == ["x"]


def test_irreducible_monomials_of_colon_example():
    A = weyl(1)
    G = groebner(A.polys("d^2, x*d - 1"))
    mons = irreducible_monomial_basis(G, 5)
    assert set(mons) == {(k, 0) for k in range(6)} | {(0, 1)}


def test_certificates_are_exact(preset):
    rng = random.Random(11)
    gens = [random_poly(rng, preset, 2) for _ in range(2)]
    gens = [g for g in gens if g]
    G = groebner(gens, certificates=True)
    for g, row in zip(G, G.certificates):
        assert check_combination(gens, row, g)
    assert is_groebner(G)


def test_dehomogenized_certificates_are_exact():
    for name in ("weyl1", "nonabelian2", "sl2", "quadric3"):
        A = PRESETS[name]
        rng = random.Random(12)
        gens = [g for g in (random_poly(rng, A, 2) for _ in range(2)) if g]
        H = groebner_via_homogenization(gens, certificates=True)
        assert is_groebner(H)
        for g, row in zip(H, H.certificates):
            assert check_combination(gens, row, g)
        assert strs(reduce_basis(H)) == strs(groebner(gens))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["commutative2", "weyl1", "nonabelian2", "sl2", "commutative2-lex", "quadric3"]), st.integers(0, 10_000))
def test_reduced_basis_is_canonical(name, seed):
    A = PRESETS[name]
    rng = random.Random(seed)
    gens = [g for g in (random_poly(rng, A, 2) for _ in range(3)) if g]
    if not gens:
        return
    G = groebner(gens)
    shuffled = [g.scale(rng.choice([2, -1, Fraction(3, 7)])) for g in gens]
    rng.shuffle(shuffled)
    # redundant generators do not change the reduced basis either
    extra = random_poly(rng, A, 1) * gens[0]
    assert strs(groebner(shuffled + [extra])) == strs(G)
    for g in G:
        assert g.lc == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["commutative2", "weyl1", "nonabelian2", "heisenberg"]), st.integers(0, 10_000))
def test_ideal_elements_reduce_to_zero(name, seed):
    A = PRESETS[name]
    rng = random.Random(seed)
    gens = [g for g in (random_poly(rng, A, 2) for _ in range(2)) if g]
    if not gens:
        return
    G = groebner(gens)
    f = A.zero()
    for g in gens:
        f = f + random_poly(rng, A, 2) * g
    assert not normal_form(G, f).remainder
    res = membership(gens, f)
    assert res.member and check_combination(gens, res.cofactors, f)


def test_normal_form_is_unique_modulo_ideal():
    A = weyl(1)
    G = groebner(A.polys("x^2 - d, x*d"))
    rng = random.Random(13)
    for _ in range(20):
        f = random_poly(rng, A, 3)
        shifted = f + random_poly(rng, A, 2) * G[0] + random_poly(rng, A, 1) * G[-1]
        assert G.normal_form(f) == G.normal_form(shifted)
        cert = normal_form(G, f)
        assert cert.check(f)


def test_non_member_returns_normal_form():
    A = weyl(1)
    res = membership(A.polys("x"), A.poly("d*x - x*d"))
    assert not res.member
    assert str(res.witness) == "1"


def test_membership_homogenized_route():
    A = weyl(1)
    g = A.polys("x*d - 1, d^2")
    f = A.poly("x*d^2 - d") * g[0] + A.poly("x") * g[1]
    res = membership(g, f, method="homogenized")
    assert res.member and check_combination(g, res.cofactors, f)


def test_li_wu_top_forms_form_graded_basis():
    for name in ("weyl1", "weyl2", "nonabelian2", "sl2", "heisenberg"):
        A = PRESETS[name]
        rng = random.Random(14)
        gens = [g for g in (random_poly(rng, A, 2) for _ in range(2)) if g]
        G = groebner(gens)
        tops = [top_form(A, g) for g in G]
        assert is_groebner(tops)
        gr = associated_graded(A)
        T = groebner(tops, algebra=gr)
        for _ in range(5):
            f = A.zero()
            for g in gens:
                f = f + random_poly(rng, A, 1) * g
            if f:
                assert not T.normal_form(top_form(A, f))


def _ideal_dimension(A, gens, d):
    rows = []
    for g in gens:
        k = d - g.deg
        if k < 0:
            continue
        for a in monomials_of_degree(A.n, k):
            rows.append((A.monomial(a) * g).terms)
    return brute_rank(rows)


@pytest.mark.parametrize(
    "name,text",
    [
        ("commutative2", "x^2 - y^2, x*y"),
        ("quadric3-hom", "x*y - z^2, y^2"),
        ("rees-weyl1", "x*d - t^2, d^2"),
        ("rees-weyl1", "x^2 + d*t"),
    ],
)
def test_hilbert_function_matches_linear_algebra(name, text):
    A = PRESETS[name]
    gens = A.polys(text)
    G = groebner(gens)
    from math import comb

    for d in range(6):
        total = comb(A.n + d - 1, d)
        assert hilbert_function_quotient(G, d) == total - _ideal_dimension(A, gens, d)


def test_hilbert_function_rejects_inhomogeneous():
    A = commutative(2)
    with pytest.raises(SemanticError):
        hilbert_function_quotient(groebner(A.polys("x + 1")), 2)
    with pytest.raises(SemanticError):
        hilbert_function_quotient(groebner(weyl(1).polys("x")), 2)


def test_prime_field_groebner():
    A = commutative(2, field=PrimeField(3))
    G = groebner(A.polys("x^2 + y, x*y + 1"))
    assert is_groebner(G)
    for g in G:
        assert g.lc == A.field.one


def test_budget():
    A = commutative(3)
    with pytest.raises(BudgetExceeded):
        buchberger(A.polys("x^2 - y*z, y^2 - x*z, z^2 - x*y, x*y*z - 1"), max_pairs=1)


def test_generator_certificates():
    A = weyl(1)
    gens = A.polys("x*d - 1, d^2, d^3 + x*d^2")
    G = groebner(gens, certificates=True)
    B = G.generator_certificates()
    for f, row in zip(gens, B):
        assert check_combination(G.elements, row, f)


def test_rees_basis_is_homogeneous():
    A = weyl(1)
    H = groebner_via_homogenization(A.polys("x^2 + d, x*d + 1"))
    assert all(h.is_homogeneous() for h in H.homogeneous_basis)
    assert H.homogeneous_basis.algebra == rees(A)
