import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvable_gb import monomials as mono
from solvable_gb.errors import DimensionError, ParseError
from solvable_gb.monomials import (
    Cmp,
    DegLex,
    Lex,
    Opposite,
    Product,
    Weight,
    approx_weight_vector,
    lcm,
    minimal_generators,
    opposite_ordering,
    ordering_from_json,
    weight,
    weight_agrees,
)

ORDERS = [
    Lex(),
    DegLex(),
    Weight([1, 2, 3], Lex()),
    Product(DegLex(), Lex(), 2),
    Opposite(DegLex()),
    Opposite(Lex()),
]

exps = st.tuples(*[st.integers(0, 6)] * 3)


def lex_oracle(a, b):
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def test_compare_examples():
    assert DegLex().compare((1, 1), (2, 0)) == Cmp.LT
    assert Lex().compare((0, 5), (1, 0)) == Cmp.LT
    for o in ORDERS:
        assert o.compare((0, 0, 0), (0, 0, 0)) == Cmp.EQ


def test_compare_length_mismatch():
    with pytest.raises(DimensionError):
        Lex().compare((1, 0), (1, 0, 0))


@given(exps, exps)
def test_lex_and_deglex_match_definitions(a, b):
    assert Lex().compare(a, b) == lex_oracle(a, b)
    dl = (sum(a) > sum(b)) - (sum(a) < sum(b)) or lex_oracle(a, b)
    assert DegLex().compare(a, b) == dl


@settings(max_examples=1000)
@given(st.sampled_from(ORDERS), exps, exps, exps)
def test_ordering_axioms(o, a, b, c):
    assert o.le((0, 0, 0), a)
    if o.le(a, b):
        assert o.le(mono.add(a, c), mono.add(b, c))
    if o.le(a, b) and o.le(b, c):
        assert o.le(a, c)
    assert o.le(a, b) or o.le(b, a)


@given(exps, exps)
def test_opposite_reverses_exponents(a, b):
    o = Opposite(DegLex())
    assert o.compare(a, b) == DegLex().compare(a[::-1], b[::-1])
    assert opposite_ordering(o) == DegLex()


def test_lcm_examples():
    assert lcm((2, 0), (1, 1)) == (2, 1)
    assert lcm((0, 0), (3, 4)) == (3, 4)
    assert lcm((3, 1), (3, 1)) == (3, 1)


def test_lcm_is_least_common_multiple_brute_force():
    box = list(itertools.product(range(5), repeat=2))
    for a in box:
        for b in box:
            L = lcm(a, b)
            assert mono.divides(a, L) and mono.divides(b, L)
            for m in box:
                if mono.divides(a, m) and mono.divides(b, m):
                    assert mono.divides(L, m)


def test_minimal_generators_examples():
    assert minimal_generators({(2, 0), (1, 1), (2, 1)}) == {(2, 0), (1, 1)}
    assert minimal_generators(set()) == set()
    assert minimal_generators({(0, 0), (5, 5)}) == {(0, 0)}


@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=8))
def test_minimal_generators_antichain(F):
    M = minimal_generators(F)
    assert M <= F
    for a in M:
        for b in M:
            assert a == b or not mono.divides(a, b)
    for f in F:
        assert any(mono.divides(m, f) for m in M)


def _check_weight(order, d, n, omega):
    mons = list(mono.monomials_up_to(n, d))
    for a in mons:
        for b in mons:
            lt = order.key(a) < order.key(b)
            assert lt == (weight(omega, a) < weight(omega, b)) or a == b
    assert max(omega) <= mono.weight_norm_bound(d, n)


@pytest.mark.parametrize(
    "order,d,n",
    [(DegLex(), 2, 2), (DegLex(), 1, 3), (Lex(), 3, 1), (Lex(), 2, 2), (Lex(), 3, 2), (Weight([2, 1], Lex()), 2, 2)],
)
def test_approx_weight_vector_exhaustive(order, d, n):
    omega = approx_weight_vector(order, d, n)
    assert all(w > 0 for w in omega)
    assert weight_agrees(order, omega, d, n)
    _check_weight(order, d, n, omega)


def test_weight_vector_examples():
    assert approx_weight_vector(Lex(), 5, 1) == (1,)
    w = approx_weight_vector(DegLex(), 1, 3)
    assert weight(w, (0, 0, 1)) < weight(w, (0, 1, 0)) < weight(w, (1, 0, 0))


def test_weight_norm_bound_values():
    assert mono.weight_norm_bound(2, 2) == 24
    # 2*1*4*3^(3/2) = 41.56...
    assert mono.weight_norm_bound(1, 3) == 41
    assert mono.weight_norm_bound(1, 1) == 4


@pytest.mark.parametrize("order", ORDERS)
def test_ordering_json_round_trip(order):
    assert ordering_from_json(order.to_json()) == order


def test_ordering_json_errors():
    with pytest.raises(ParseError):
        ordering_from_json("degrevlex")
    with pytest.raises(ParseError):
        ordering_from_json({"matrix": []})


def test_degree_compatibility_flags():
    assert DegLex().is_degree_compatible(3)
    assert not Lex().is_degree_compatible(2)
    assert Lex().is_degree_compatible(1)
    assert Weight([1, 1], Lex()).is_degree_compatible(2)
