import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PRESETS, nonabelian2, random_poly, word_product
from solvable_gb.algebra import (
    SolvableAlgebra,
    associated_graded,
    commutative,
    dehomogenize_poly,
    homogenize_poly,
    lie,
    opposite,
    rees,
    tensor,
    top_form,
    validate,
    weyl,
)
from solvable_gb.errors import AlgebraMismatch, SemanticError, ValidationError
from solvable_gb.fields import PrimeField
from solvable_gb.monomials import DegLex, Lex, approx_weight_vector, monomials_up_to, weight


def test_weyl_flags():
    A = weyl(1)
    assert A.quadric and not A.homogeneous and not A.commutative
    assert commutative(2).commutative


def test_validation_rejects_equal_leading_monomial():
    with pytest.raises(ValidationError) as exc:
        validate(["x", "y"], DegLex(), {(0, 1): (1, {(1, 1): 1})})
    assert exc.value.pair == (1, 2)


def test_validation_rejects_larger_leading_monomial():
    with pytest.raises(ValidationError):
        validate(["x", "y"], DegLex(), {(0, 1): (1, {(0, 3): 1})})
    with pytest.raises(ValidationError):
        validate(["x", "y"], DegLex(), {(0, 1): (0, {})})


def test_weyl_products():
    A = weyl(1)
    x, d = A.gens()
    assert d * x == x * d + 1
    assert str(d * d * x) == "x*d^2 + 2*d"
    assert str((x * d) * (x * d)) == "x^2*d^2 + x*d"
    assert x * d * A.one() == x * d
    assert (x * d) * A.zero() == A.zero()


def test_commutative_product():
    A = commutative(3)
    assert A.multiply_monomials((1, 0, 2), (0, 3, 1)) == A.monomial((1, 3, 3))


def test_lie_preset_sign():
    U = nonabelian2()
    x1, x2 = U.gens()
    assert x2 * x1 == x1 * x2 - x1


def test_lie_heisenberg_center():
    U = PRESETS["heisenberg"]
    x1, x2, x3 = U.gens()
    assert x3 * x1 == x1 * x3
    assert x2 * x1 == x1 * x2 - x3


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_preset_associativity_table(name):
    assert PRESETS[name].associativity_defects() == []


def test_associativity_defects_detects_bad_system():
    # x_3 x_2 = x_2 x_3 + x_1 and x_3 x_1 = 2 x_1 x_3 clash on the overlap x_3 x_2 x_1
    A = SolvableAlgebra(["x", "y", "z"], DegLex(), {(1, 2): (1, {(1, 0, 0): 1}), (0, 2): (2, {}), (0, 1): (1, {})})
    assert A.associativity_defects()


def test_monomial_products_match_word_rewriting(preset):
    rng = random.Random(1)
    mons = list(monomials_up_to(preset.n, 3))
    for _ in range(60):
        a, b = rng.choice(mons), rng.choice(mons)
        assert preset._mul_mono(a, b) == word_product(preset, a, b)


def test_lm_multiplication_random(preset):
    rng = random.Random(2)
    mons = list(monomials_up_to(preset.n, 4))
    for _ in range(1000):
        a, b = rng.choice(mons), rng.choice(mons)
        p = preset.multiply_monomials(a, b)
        ab = tuple(x + y for x, y in zip(a, b))
        assert p.lm == ab
        assert p.lc != 0
        if preset.quadric:
            assert p.deg <= sum(ab)


def test_associativity_random(preset):
    rng = random.Random(3)
    for _ in range(15):
        f, g, h = (random_poly(rng, preset, 2) for _ in range(3))
        assert (f * g) * h == f * (g * h)


def test_integral_domain(preset):
    rng = random.Random(4)
    for _ in range(30):
        f, g = random_poly(rng, preset, 2), random_poly(rng, preset, 2)
        if f and g:
            fg = f * g
            assert fg
            assert fg.lm == tuple(x + y for x, y in zip(f.lm, g.lm))


def test_weight_is_additive_on_products():
    for A in (weyl(1), nonabelian2(), PRESETS["sl2"]):
        omega = approx_weight_vector(A.order, 2, A.n)
        rng = random.Random(5)
        mons = list(monomials_up_to(A.n, 3))
        for _ in range(100):
            a, b = rng.choice(mons), rng.choice(mons)
            p = A.multiply_monomials(a, b)
            top = max(weight(omega, m) for m in p.terms)
            assert top == weight(omega, a) + weight(omega, b)


def test_opposite_multiplication_is_reversed():
    for A in (weyl(1), nonabelian2(), PRESETS["sl2"], PRESETS["quadric3"]):
        B = opposite(A)
        assert not B.associativity_defects()
        rng = random.Random(6)
        mons = list(monomials_up_to(A.n, 3))
        for _ in range(40):
            a, b = rng.choice(mons), rng.choice(mons)
            lhs = B._mul_mono(a, b)
            rhs = {m[::-1]: c for m, c in A._mul_mono(b[::-1], a[::-1]).items()}
            assert lhs == rhs
        assert opposite(B) is A


def test_opposite_of_commutative_is_commutative():
    assert opposite(commutative(3)).commutative


def test_tensor_products():
    C = tensor(commutative(1), commutative(1))
    assert C.n == 2 and C.commutative
    A = weyl(1)
    E = tensor(A, opposite(A))
    assert E.n == 4 and not E.associativity_defects()
    x, d, d2, x2 = E.gens()
    assert x2 * x == x * x2 and d2 * d == d * d2
    assert d * x == x * d + 1


def test_tensor_field_mismatch():
    with pytest.raises(SemanticError):
        tensor(commutative(1), commutative(1, field=PrimeField(5)))


def test_rees_algebra():
    R = rees(commutative(2))
    assert R.commutative and R.names == ("x", "y", "t")
    R = rees(weyl(1))
    assert R.homogeneous and not R.associativity_defects()
    x, d, t = R.gens()
    assert d * x == x * d + t * t
    for v in (x, d):
        assert v * t == t * v


def test_rees_rejects_non_quadric():
    A = SolvableAlgebra(["x", "y"], Lex(), {(0, 1): (1, {(0, 3): 1})})
    with pytest.raises(SemanticError):
        rees(A)


def test_homogenize_examples():
    A = commutative(1)
    x = A.var(0)
    h = homogenize_poly(A, x + x * x)
    assert str(h) == "x^2 + x*t"
    R = rees(A)
    assert dehomogenize_poly(R, R.poly("x*t")) == x
    assert not homogenize_poly(A, A.zero())


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["weyl1", "nonabelian2", "sl2", "quadric3", "commutative2"]), st.integers(0, 10_000))
def test_dehomogenize_homogenize_identity(name, seed):
    A = PRESETS[name]
    f = random_poly(random.Random(seed), A, 3, terms=4)
    h = homogenize_poly(A, f)
    assert h.is_homogeneous()
    assert dehomogenize_poly(rees(A), h) == f


def test_dehomogenize_is_multiplicative():
    A = weyl(1)
    R = rees(A)
    rng = random.Random(8)
    for _ in range(20):
        f, g = random_poly(rng, R, 2), random_poly(rng, R, 2)
        assert dehomogenize_poly(R, f * g) == dehomogenize_poly(R, f) * dehomogenize_poly(R, g)


def test_associated_graded():
    assert associated_graded(weyl(1)).commutative
    assert associated_graded(nonabelian2()).commutative
    Q = SolvableAlgebra(["x", "y"], DegLex(), {(0, 1): (Fraction(1, 2), {})})
    assert associated_graded(Q) == Q


def test_top_form():
    A = weyl(1)
    f = A.poly("x*d + 1")
    assert str(top_form(A, f)) == "x*d"
    W = weyl(2)
    tops = [str(top_form(W, g)) for g in W.polys("x1*d1, x2*d1^2 - d1")]
    assert tops == ["x1*d1", "x2*d1^2"]


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        weyl(1).var(0) * commutative(2).var(0)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    A = commutative(2, field=F)
    f = A.poly("3*x + 5")
    assert str(f * f) == "2*x^2 + 2*x + 4"
    W = weyl(1, field=F)
    x, d = W.gens()
    assert d * x == x * d + 1


def test_algebra_equality_structural():
    assert weyl(1) == weyl(1)
    assert weyl(1) != weyl(1, Lex())
    assert hash(weyl(1)) == hash(weyl(1))


def test_lie_sl2_brackets():
    U = lie(3, {(2, 1): {(0, 0, 1): -1}, (3, 1): {(1, 0, 0): 2}, (3, 2): {(0, 1, 0): -2}})
    e, f, h = U.gens()
    # x_j x_i = x_i x_j - [x_j, x_i], so commutators are minus the given brackets
    assert f * e - e * f == h
    assert h * e - e * h == -2 * e
    assert h * f - f * h == 2 * f
