"""Polynomial strings: parsing and canonical printing.

Grammar (ASCII)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' INT]
    atom   := NUMBER ['/' NUMBER] | NAME | '(' expr ')'

Juxtaposed or starred factors are multiplied in the algebra, so ``d*x``
in the Weyl algebra parses to ``x*d + 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym is not None:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}")
            out.append(("sym", sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, algebra, text, commutative_monomials=False):
        self.A = algebra
        self.toks = _tokenize(text)
        self.i = 0
        # relation right-hand sides are PBW normal forms: combine exponents
        self.plain = commutative_monomials

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.toks[self.i][1]!r}")
        return val

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                return total

    def _starts_atom(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind == "sym" and val == "(")

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                acc = self._mul(acc, self.factor())
            elif self._starts_atom():
                acc = self._mul(acc, self.factor())
            else:
                return acc

    def _mul(self, f, g):
        if self.plain:
            res = {}
            for a, ca in f.terms.items():
                for b, cb in g.terms.items():
                    m = tuple(x + y for x, y in zip(a, b))
                    res[m] = res.get(m, 0) + ca * cb
            return self.A.from_terms(res)
        return f * g

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            res = self.A.one()
            for _ in range(k):
                res = self._mul(res, base)
            return res
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            num = Fraction(val)
            k2, v2 = self.peek()
            if k2 == "sym" and v2 == "/":
                self.take()
                k3, den = self.take()
                if k3 != "num" or den == 0:
                    raise ParseError("bad rational denominator")
                num = num / den
            return self.A.constant(num)
        if kind == "name":
            if val not in self.A.names:
                raise ParseError(f"unknown variable {val!r}")
            return self.A.var(val)
        if kind == "sym" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError("unexpected end of input" if kind is None else f"unexpected {val!r}")


def parse_poly(algebra, text: str, normal_form_input=False):
    """Parse ``text`` into a Polynomial of ``algebra``.

    With ``normal_form_input`` each product of variables is read as an ordered
    monomial (used for relation right-hand sides).
    """
    return _Parser(algebra, str(text), normal_form_input).parse()


def split_top_level(text: str, sep=","):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def parse_poly_list(algebra, text: str):
    return [parse_poly(algebra, s) for s in split_top_level(text)]


def format_monomial(names, a) -> str:
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f) -> str:
    A = f.algebra
    if not f.terms:
        return "0"
    out = []
    for idx, (a, c) in enumerate(f.items()):
        s = A.field.to_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        m = format_monomial(A.names, a)
        if m:
            body = m if s == "1" else f"{s}*{m}"
        else:
            body = s
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_poly_list(polys) -> str:
    return ", ".join(format_poly(p) for p in polys)
