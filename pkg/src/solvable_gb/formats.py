"""Algebra descriptions: JSON files and short command-line specs."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .algebra import SolvableAlgebra, commutative, lie, weyl
from .errors import ParseError
from .fields import QQ, field_from_json
from .monomials import ordering_from_json
from .parsing import format_poly, parse_poly


def algebra_to_json(A: SolvableAlgebra) -> dict:
    B = commutative(A.n, names=A.names, field=A.field)
    rels = []
    for (i, j), (c, p) in sorted(A.relations().items()):
        rels.append(
            {
                "j": j + 1,
                "i": i + 1,
                "c": A.field.to_str(c),
                "p": format_poly(B.from_terms(p)),
            }
        )
    return {
        "field": A.field.to_json(),
        "vars": list(A.names),
        "order": A.order.to_json(),
        "relations": rels,
    }


def algebra_from_json(obj: dict, order=None) -> SolvableAlgebra:
    """Build (and validate) an algebra from its JSON description.

    Relation polynomials are read as ordered monomials, so "y*x" and "x*y"
    denote the same basis element.
    """
    try:
        names = list(obj["vars"])
    except (KeyError, TypeError):
        raise ParseError("algebra description needs a 'vars' list") from None
    field = field_from_json(obj.get("field", "QQ"))
    if order is None:
        order = ordering_from_json(obj.get("order", "deglex"))
    B = commutative(len(names), names=names, field=field)
    rels = {}
    for r in obj.get("relations", []):
        try:
            i, j = int(r["i"]) - 1, int(r["j"]) - 1
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"relation needs integer 'i' and 'j': {r!r}") from None
        c = field(str(r.get("c", "1")))
        p = parse_poly(B, str(r.get("p", "0")), normal_form_input=True)
        if i > j:
            raise ParseError(f"relation must have i < j, got i={i + 1}, j={j + 1}")
        rels[(i, j)] = (c, dict(p.terms))
    return SolvableAlgebra(names, order, rels, field)


_LIE_ITEM = re.compile(r"^\s*\[\s*([A-Za-z_]\w*)\s*,\s*([A-Za-z_]\w*)\s*\]\s*=\s*(.+?)\s*$")


def parse_algebra_spec(spec: str, order=None, field=QQ) -> SolvableAlgebra:
    """``weyl:n``, ``commutative:n``, ``lie:n:[xj,xi]=expr;...`` or a JSON file path."""
    if order is not None:
        order = ordering_from_json(order)
    kind, _, rest = spec.partition(":")
    if kind in ("weyl", "commutative", "lie") and rest:
        count, _, tail = rest.partition(":")
        try:
            n = int(count)
        except ValueError:
            raise ParseError(f"bad variable count in {spec!r}") from None
        if n < 1:
            raise ParseError("need at least one variable")
        if kind == "weyl":
            return weyl(n, order, field)
        if kind == "commutative":
            return commutative(n, order, field=field)
        names = [f"x{k + 1}" for k in range(n)]
        B = commutative(n, names=names, field=field)
        brackets = {}
        for item in filter(None, (s.strip() for s in tail.split(";"))):
            m = _LIE_ITEM.match(item)
            if not m:
                raise ParseError(f"cannot read bracket {item!r}; expected [xj,xi]=expr")
            a, b, expr = m.groups()
            if a not in names or b not in names:
                raise ParseError(f"unknown variable in bracket {item!r}")
            brackets[(names.index(a) + 1, names.index(b) + 1)] = dict(parse_poly(B, expr).terms)
        return lie(n, brackets, order, names, field)
    path = Path(spec)
    if not path.exists():
        raise ParseError(f"unknown algebra {spec!r}; use weyl:n, commutative:n, lie:n:... or a JSON file")
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{spec}: {exc}") from None
    if isinstance(obj, dict) and "algebra" in obj:
        obj = obj["algebra"]
    return algebra_from_json(obj, order)
