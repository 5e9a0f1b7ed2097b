"""Seeded generator of verification instances.

Every instance is a plain dict (algebra description, generator strings,
flags) so a corpus can be written to JSON and read back byte-for-byte.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SolvableAlgebra, commutative, lie, rees, weyl
from .errors import ValidationError
from .formats import algebra_from_json, algebra_to_json
from .monomials import DegLex, Lex, monomials_of_degree, monomials_up_to
from .parsing import format_poly, parse_poly_list


@dataclass(frozen=True)
class CorpusSizes:
    max_vars: int = 4
    max_degree: int = 3
    max_gens: int = 4
    per_algebra: int = 3


def _nonabelian2():
    return lie(2, {(2, 1): {(1, 0): 1}})


def _heisenberg():
    return lie(3, {(2, 1): {(0, 0, 1): 1}})


def _sl2():
    # x1 = e, x2 = f, x3 = h
    return lie(3, {(2, 1): {(0, 0, 1): -1}, (3, 1): {(1, 0, 0): 2}, (3, 2): {(0, 1, 0): -2}})


def _below(A_order, i, j, n):
    """Monomials of degree <= 2 strictly below x_i x_j."""
    top = [0] * n
    top[i] += 1
    top[j] += 1
    key = A_order.key(tuple(top))
    return [a for a in monomials_up_to(n, 2) if A_order.key(a) < key]


def random_quadric_system(rng: random.Random, n: int, homogeneous=False, tries=200) -> SolvableAlgebra:
    """Random commutation system that passes validation and associativity.

    Candidates are drawn independently and rejected until the overlap
    x_k x_j x_i reduces the same way both sides and at least one p_ij is
    nonzero (of degree < 2 somewhere unless ``homogeneous``); a q-commuting
    system is returned if no candidate survives.
    """
    order = DegLex()
    coeffs = [1, 1, 1, -1, 2, Fraction(1, 2)]
    for _ in range(tries):
        rels = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.3:
                    continue
                c = rng.choice(coeffs)
                pool = [a for a in _below(order, i, j, n) if not homogeneous or sum(a) == 2]
                p = {}
                for _ in range(rng.randint(0, 2)):
                    p[rng.choice(pool)] = rng.choice([1, -1, 2])
                rels[(i, j)] = (c, p)
        try:
            A = SolvableAlgebra(_names(n), order, rels)
        except ValidationError:
            continue
        if A.semi_commutative or (A.homogeneous != homogeneous):
            continue
        if not A.associativity_defects():
            return A
    rels = {(i, j): (rng.choice(coeffs), {}) for i in range(n) for j in range(i + 1, n)}
    return SolvableAlgebra(_names(n), order, rels)


def _names(n):
    return ["x", "y", "z"][:n] if n <= 3 else [f"x{k + 1}" for k in range(n)]


def preset_algebras(rng: random.Random, sizes: CorpusSizes) -> list:
    out = []
    for n in range(1, sizes.max_vars + 1):
        out.append((f"commutative:{n}", commutative(n)))
    out.append(("commutative:2:lex", commutative(2, Lex())))
    out.append(("weyl:1", weyl(1)))
    if sizes.max_vars >= 4:
        out.append(("weyl:2", weyl(2)))
    out.append(("lie:nonabelian2", _nonabelian2()))
    if sizes.max_vars >= 3:
        out.append(("lie:heisenberg", _heisenberg()))
        out.append(("lie:sl2", _sl2()))
        out.append(("rees:weyl1", rees(weyl(1))))
        out.append(("rees:nonabelian2", rees(_nonabelian2())))
    for n in range(2, min(sizes.max_vars, 4) + 1):
        out.append((f"quadric:{n}", random_quadric_system(rng, n)))
        out.append((f"quadric-homogeneous:{n}", random_quadric_system(rng, n, homogeneous=True)))
    return out


def random_polynomial(rng: random.Random, A: SolvableAlgebra, deg: int, homogeneous: bool, terms=3):
    f = {}
    lead = list(monomials_of_degree(A.n, deg))
    f[rng.choice(lead)] = rng.choice([1, 1, -1, 2, 3])
    pool = lead if homogeneous else list(monomials_up_to(A.n, deg))
    for _ in range(rng.randint(0, terms - 1)):
        a = rng.choice(pool)
        f[a] = f.get(a, 0) + rng.choice([1, -1, 2, -2, Fraction(1, 2)])
    return A.from_terms(f)


def _degree_cap(A: SolvableAlgebra, sizes: CorpusSizes) -> int:
    # keep the Buchberger runs (which use no pair criteria) at desk scale
    if A.n >= 4:
        return min(sizes.max_degree, 2)
    return sizes.max_degree


def gen_corpus(seed: int = 0, sizes: CorpusSizes | None = None) -> list:
    sizes = sizes or CorpusSizes()
    rng = random.Random(seed)
    out = []
    for name, A in preset_algebras(rng, sizes):
        variants = [False, True] if A.homogeneous else [False]
        for homogeneous in variants:
            for k in range(sizes.per_algebra):
                dcap = _degree_cap(A, sizes)
                m = rng.randint(1, sizes.max_gens if A.n <= 3 else min(sizes.max_gens, 3))
                gens = []
                for _ in range(m):
                    f = random_polynomial(rng, A, rng.randint(1, dcap), homogeneous)
                    if f:
                        gens.append(format_poly(f))
                out.append(
                    {
                        "name": f"{name}/{'hom' if homogeneous else 'gen'}/{k}",
                        "algebra": algebra_to_json(A),
                        "gens": gens,
                        "homogeneous": homogeneous,
                    }
                )
    return out


def dump_corpus(corpus: list) -> str:
    return json.dumps(corpus, sort_keys=True, indent=1) + "\n"


def load_instance(inst: dict):
    A = algebra_from_json(inst["algebra"])
    gens = parse_poly_list(A, ", ".join(inst["gens"])) if inst["gens"] else []
    return A, gens
