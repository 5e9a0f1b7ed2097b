import random
from fractions import Fraction

import pytest

from solvable_gb.algebra import commutative, lie, rees, weyl
from solvable_gb.corpus import random_quadric_system
from solvable_gb.monomials import Lex, monomials_up_to


def nonabelian2():
    return lie(2, {(2, 1): {(1, 0): 1}})


def sl2():
    return lie(3, {(2, 1): {(0, 0, 1): -1}, (3, 1): {(1, 0, 0): 2}, (3, 2): {(0, 1, 0): -2}})


def heisenberg():
    return lie(3, {(2, 1): {(0, 0, 1): 1}})


def preset_table():
    rng = random.Random(7)
    return {
        "commutative2": commutative(2),
        "commutative2-lex": commutative(2, Lex()),
        "weyl1": weyl(1),
        "weyl2": weyl(2),
        "nonabelian2": nonabelian2(),
        "sl2": sl2(),
        "heisenberg": heisenberg(),
        "rees-weyl1": rees(weyl(1)),
        "quadric3": random_quadric_system(rng, 3),
        "quadric3-hom": random_quadric_system(rng, 3, homogeneous=True),
    }


PRESETS = preset_table()


@pytest.fixture(params=sorted(PRESETS))
def preset(request):
    return PRESETS[request.param]


# -- independent oracle: normal ordering of words by single swaps ---------------


def _word(a):
    w = []
    for i, e in enumerate(a):
        w.extend([i] * e)
    return tuple(w)


def word_product(A, a, b):
    """x^a * x^b by rewriting the leftmost misordered adjacent pair until none is left."""
    rels = A.relations()
    todo = {_word(a) + _word(b): Fraction(1)}
    done = {}
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        pos = next((k for k in range(len(w) - 1) if w[k] > w[k + 1]), None)
        if pos is None:
            m = [0] * A.n
            for i in w:
                m[i] += 1
            m = tuple(m)
            done[m] = done.get(m, 0) + c
            continue
        j, i = w[pos], w[pos + 1]
        cij, p = rels.get((i, j), (1, {}))
        head, tail = w[:pos], w[pos + 2:]
        swapped = head + (i, j) + tail
        todo[swapped] = todo.get(swapped, 0) + c * cij
        for mono, coef in p.items():
            nw = head + _word(mono) + tail
            todo[nw] = todo.get(nw, 0) + c * coef
    return {m: v for m, v in done.items() if v}


def random_poly(rng, A, deg, terms=3):
    mons = list(monomials_up_to(A.n, deg))
    f = {}
    for _ in range(terms):
        f[rng.choice(mons)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return A.from_terms(f)


def brute_rank(rows):
    """Rank of a list of sparse rows (dict column -> Fraction) by Gaussian elimination."""
    pivots = {}
    rank = 0
    for r in rows:
        r = {k: Fraction(v) for k, v in r.items() if v}
        while r:
            col = max(r)
            if col in pivots:
                prow = pivots[col]
                f = r[col] / prow[col]
                for k, v in prow.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                pivots[col] = r
                rank += 1
                break
    return rank


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
