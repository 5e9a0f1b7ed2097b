"""Command-line entry point: ``solvable-gb <subcommand> ...``.

Exit codes: 0 success, 2 algebra validation failure, 3 parse error,
4 semantic error, 5 verification violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds as bnd
from .algebra import SolvableAlgebra
from .cones import (
    cone_to_json,
    decompose_homogeneous_ideal,
    hilbert_from_decomposition,
    make_exact,
    split,
    split_complement,
)
from .corpus import CorpusSizes, dump_corpus, gen_corpus, load_instance
from .errors import ParseError, SemanticError, ValidationError
from .fields import field_from_json
from .formats import algebra_to_json, parse_algebra_spec
from .groebner import (
    groebner,
    groebner_via_homogenization,
    hilbert_function_quotient,
    membership,
    normal_form,
)
from .monomials import ordering_from_json
from .parsing import format_poly, format_poly_list, parse_poly, parse_poly_list
from .syzygy import colon_ideal, syzygies_of_tuple
from .twosided import two_sided_groebner
from .verify import VerifyOptions, verify_instance

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_SEMANTIC, EXIT_VIOLATION = 0, 2, 3, 4, 5


class Output:
    """Collects text lines and a JSON payload; prints one of them at the end."""

    def __init__(self, as_json: bool, task: str):
        self.as_json = as_json
        self.lines = []
        self.data = {"task": task}

    def put(self, key, value, text=None):
        self.data[key] = value
        if text is not None:
            self.lines.append(text)

    def text(self, line):
        self.lines.append(line)

    def emit(self, stream):
        if self.as_json:
            stream.write(json.dumps(self.data, sort_keys=True, indent=1) + "\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _order_arg(text):
    if text is None:
        return None
    text = text.strip()
    if text.startswith("{"):
        try:
            return ordering_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"--order: {exc}") from None
    return ordering_from_json(text)


def _algebra(args) -> SolvableAlgebra:
    field = field_from_json(args.field)
    return parse_algebra_spec(args.algebra, _order_arg(args.order), field)


def _gens(A, text):
    return parse_poly_list(A, text or "")


def _names(A):
    return list(A.names)


# -- subcommands ---------------------------------------------------------------


def cmd_check_algebra(args, out):
    A = _algebra(args)
    defects = A.associativity_defects()
    out.put("algebra", algebra_to_json(A))
    out.put("flags", A.flags)
    out.put("associativity_defects", [[k + 1 for k in t] for t in defects])
    out.text("valid: lm(p_ij) < x_i x_j for every relation")
    for key, val in A.flags.items():
        out.text(f"{key}: {str(val).lower()}")
    if defects:
        out.text("associativity fails on triples " + ", ".join(str(tuple(k + 1 for k in t)) for t in defects))
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_multiply(args, out):
    A = _algebra(args)
    f, g = parse_poly(A, args.f), parse_poly(A, args.g)
    h = f * g
    out.put("result", format_poly(h), format_poly(h))
    return EXIT_OK


def _gb(A, gens, method, certificates=False):
    if method == "homogenized":
        return groebner_via_homogenization(gens, certificates=certificates)
    return groebner(gens, certificates=certificates, algebra=A)


def cmd_groebner(args, out):
    A = _algebra(args)
    G = _gb(A, _gens(A, args.gens), args.method, args.certificates)
    out.put("basis", [format_poly(g) for g in G], format_poly_list(G.elements))
    if args.certificates:
        certs = [[format_poly(c) for c in row] for row in G.certificates]
        out.put("certificates", certs)
        for g, row in zip(G.elements, certs):
            out.text(f"  {format_poly(g)} = [{', '.join(row)}] . gens")
    return EXIT_OK


def cmd_reduce(args, out):
    A = _algebra(args)
    gens = _gens(A, args.gens)
    f = parse_poly(A, args.f)
    basis = gens if args.as_given else groebner(gens, algebra=A).elements
    cert = normal_form(basis, f)
    out.put("remainder", format_poly(cert.remainder), format_poly(cert.remainder))
    out.put("basis", [format_poly(g) for g in basis])
    out.put("cofactors", [format_poly(c) for c in cert.cofactors])
    return EXIT_OK


def cmd_membership(args, out):
    A = _algebra(args)
    gens = _gens(A, args.gens)
    f = parse_poly(A, args.f)
    res = membership(gens, f, method=args.method)
    out.put("member", res.member, "true" if res.member else "false")
    if res.member:
        ys = [format_poly(y) for y in res.cofactors]
        out.put("cofactors", ys, "cofactors: " + ", ".join(ys))
    else:
        out.put("normal_form", format_poly(res.witness), "normal form: " + format_poly(res.witness))
    return EXIT_OK


def cmd_colon(args, out):
    A = _algebra(args)
    G = colon_ideal(_gens(A, args.i), parse_poly(A, args.f))
    out.put("basis", [format_poly(g) for g in G], format_poly_list(G.elements) if len(G) else "0")
    return EXIT_OK


def cmd_syzygy(args, out):
    A = _algebra(args)
    S = syzygies_of_tuple(_gens(A, args.gens), method=args.method)
    rows = [[format_poly(c) for c in v] for v in S.generators]
    out.put("syzygies", rows)
    out.put("checked", S.check())
    for r in rows:
        out.text("[" + ", ".join(r) + "]")
    if not rows:
        out.text("(no syzygies)")
    return EXIT_OK


def _cone_lines(out, cones, names, key):
    js = [cone_to_json(c, names) for c in cones]
    out.put(key, js)
    for c in js:
        out.text(f"  w={c['w']}  y={{{', '.join(c['y'])}}}  h={c['h']}")


def cmd_decompose_ideal(args, out):
    A = _algebra(args)
    dec = decompose_homogeneous_ideal(_gens(A, args.gens), args.policy)
    out.put("d", dec.d, f"{dec.d}-standard decomposition of the ideal:")
    _cone_lines(out, dec.cones, _names(A), "cones")
    return EXIT_OK


def _lms(A, gens, args):
    if args.monomial:
        return [g.lm for g in gens]
    return [g.lm for g in groebner(gens, algebra=A)]


def cmd_split(args, out):
    A = _algebra(args)
    F = _lms(A, _gens(A, args.gens), args)
    if args.w:
        w = parse_poly(A, args.w)
        if len(w.terms) != 1:
            raise SemanticError("--w must be a single monomial")
        apex = w.lm
    else:
        apex = (0,) * A.n
    ys = (
        frozenset(A.names.index(s.strip()) for s in args.y.split(",") if s.strip())
        if args.y is not None
        else frozenset(range(A.n))
    )
    P, Q = split(apex, ys, F, args.policy)
    out.text("P:")
    _cone_lines(out, P, _names(A), "P")
    out.text("Q:")
    _cone_lines(out, Q, _names(A), "Q")
    return EXIT_OK


def cmd_decompose(args, out):
    A = _algebra(args)
    F = _lms(A, _gens(A, args.gens), args)
    _, Q = split_complement(F, A.n, args.policy)
    if args.exact:
        Q, _ = make_exact(Q, A.n, args.policy)
    out.text("normal-form space:")
    _cone_lines(out, Q, _names(A), "cones")
    return EXIT_OK


def cmd_macaulay(args, out):
    A = _algebra(args)
    F = _lms(A, _gens(A, args.gens), args)
    _, Q = split_complement(F, A.n, args.policy)
    D, b = make_exact(Q, A.n, args.policy)
    out.put("b", list(b.b), "b = (" + ", ".join(map(str, b.b)) + ")")
    if args.show_cones:
        _cone_lines(out, D, _names(A), "cones")
    return EXIT_OK


def _poly_text(coeffs):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mon = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if mon and abs(c) == 1:
            body = mon
        else:
            body = f"{abs(c)}*{mon}" if mon else str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


def cmd_hilbert(args, out):
    A = _algebra(args)
    G = groebner(_gens(A, args.gens), algebra=A)
    table = [hilbert_function_quotient(G, k) for k in range(args.up_to + 1)]
    out.put("table", table, "H = " + " ".join(map(str, table)))
    return EXIT_OK


def cmd_hilbert_decomp(args, out):
    A = _algebra(args)
    F = _lms(A, _gens(A, args.gens), args)
    _, Q = split_complement(F, A.n, args.policy)
    D, _ = make_exact(Q, A.n, args.policy)
    H = hilbert_from_decomposition(D, A.n, args.up_to)
    out.put("table", list(H.table), "H = " + " ".join(map(str, H.table)))
    out.put("polynomial", [str(c) for c in H.polynomial], "P(T) = " + _poly_text(H.polynomial))
    out.put("regularity", H.regularity, f"regularity = {H.regularity}")
    if H.macaulay is not None:
        out.put("macaulay", list(H.macaulay.b), "b = (" + ", ".join(map(str, H.macaulay.b)) + ")")
        out.put("sigma", H.sigma, f"sigma = {H.sigma}")
    return EXIT_OK


def cmd_bounds(args, out):
    dc = args.order in ("deglex", "degree-compatible", "weight")
    v = bnd.evaluate(args.formula, args.n, args.d, args.deg_f, dc)
    out.put("value", str(v), str(v))
    return EXIT_OK


def cmd_two_sided(args, out):
    A = _algebra(args)
    G = two_sided_groebner(A, _gens(A, args.gens), method=args.method)
    out.put("basis", [format_poly(g) for g in G], format_poly_list(G.elements) if len(G) else "0")
    out.put("two_sided", G.extras["two_sided"])
    return EXIT_OK


def cmd_verify(args, out):
    opts = VerifyOptions(seed=args.seed, hilbert_degree=args.hilbert_degree)
    instances = []
    if args.corpus:
        try:
            corpus = json.loads(Path(args.corpus).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"{args.corpus}: {exc}") from None
        for inst in corpus:
            A, gens = load_instance(inst)
            instances.append((inst.get("name", ""), A, gens))
    else:
        A = _algebra(args)
        instances.append(("instance", A, _gens(A, args.gens)))
    reports = []
    violations = 0
    for name, A, gens in instances:
        rep = verify_instance(A, gens, opts, name)
        reports.append(
            {
                "name": name,
                "ok": rep.ok,
                "checks": [
                    {"name": c.name, "ok": c.ok, "value": _jsonable(c.value), "bound": _jsonable(c.bound)}
                    for c in rep.checks
                ],
            }
        )
        for line in rep.lines():
            out.text(line)
        violations += len(rep.violations)
    out.put("reports", reports)
    out.put("violations", violations, f"{len(instances)} instance(s), {violations} violation(s)")
    return EXIT_VIOLATION if violations else EXIT_OK


def _jsonable(v):
    if v is None or isinstance(v, (bool, int)):
        return v
    return str(v)


def cmd_gen_corpus(args, out):
    sizes = CorpusSizes(args.max_vars, args.max_degree, args.max_gens, args.per_algebra)
    corpus = gen_corpus(args.seed, sizes)
    text = dump_corpus(corpus)
    if args.out:
        Path(args.out).write_text(text)
        out.put("instances", len(corpus), f"wrote {len(corpus)} instances to {args.out}")
    else:
        out.as_json = False
        out.lines = [text.rstrip("\n")]
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solvable-gb", description="Groebner bases in algebras of solvable type")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, algebra=True):
        sp = sub.add_parser(name, help=help_)
        if algebra:
            sp.add_argument("--algebra", default="commutative:2", help="weyl:n, commutative:n, lie:n:[xj,xi]=expr;... or JSON file")
            sp.add_argument("--order", default=None, help='lex, deglex or a JSON ordering literal')
            sp.add_argument("--field", default="QQ", help="QQ or GF(p)")
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--timing", action="store_true", help="report wall-clock time")
        sp.set_defaults(fn=fn)
        return sp

    def policy(sp):
        sp.add_argument("--policy", choices=["least", "greatest"], default="least")

    def method(sp):
        sp.add_argument("--method", choices=["direct", "homogenized"], default="direct")

    add("check-algebra", cmd_check_algebra, "validate a commutation system")

    sp = add("multiply", cmd_multiply, "product f*g in normal form")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)

    sp = add("groebner", cmd_groebner, "reduced left Groebner basis")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--certificates", action="store_true")
    method(sp)

    sp = add("reduce", cmd_reduce, "normal form of f")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--f", required=True)
    sp.add_argument("--as-given", action="store_true", help="reduce by the generators without computing a basis")

    sp = add("membership", cmd_membership, "ideal membership with cofactors")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--f", required=True)
    method(sp)

    sp = add("colon", cmd_colon, "left colon ideal (I : f)")
    sp.add_argument("--i", required=True)
    sp.add_argument("--f", required=True)

    sp = add("syzygy", cmd_syzygy, "generators of the left syzygy module")
    sp.add_argument("--gens", required=True)
    method(sp)

    sp = add("decompose-ideal", cmd_decompose_ideal, "cone decomposition of a homogeneous ideal")
    sp.add_argument("--gens", required=True)
    policy(sp)

    for name, fn, help_ in [
        ("split", cmd_split, "SPLIT of a monomial cone against lm(G)"),
        ("decompose", cmd_decompose, "standard cone decomposition of the normal-form space"),
        ("macaulay", cmd_macaulay, "Macaulay constants of the normal-form space"),
        ("hilbert-decomp", cmd_hilbert_decomp, "Hilbert data from an exact cone decomposition"),
    ]:
        sp = add(name, fn, help_)
        sp.add_argument("--gens", required=True)
        sp.add_argument("--monomial", action="store_true", help="take leading monomials of the generators as given")
        policy(sp)
        if name == "split":
            sp.add_argument("--w", default=None, help="apex monomial (default 1)")
            sp.add_argument("--y", default=None, help="comma-separated cone variables (default all)")
        if name == "decompose":
            sp.add_argument("--exact", action="store_true")
        if name == "macaulay":
            sp.add_argument("--show-cones", action="store_true")
        if name == "hilbert-decomp":
            sp.add_argument("--up-to", type=int, default=10)

    sp = add("hilbert", cmd_hilbert, "Hilbert function of R/I for homogeneous I")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--up-to", type=int, default=10)

    sp = add("bounds", cmd_bounds, "exact value of a degree bound", algebra=False)
    sp.add_argument("--formula", required=True, choices=sorted(bnd.FORMULAS))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--deg-f", type=int, default=0)
    sp.add_argument("--order", default="general", help="deglex (degree-compatible) or general")

    sp = add("two-sided-groebner", cmd_two_sided, "two-sided Groebner basis via the enveloping algebra")
    sp.add_argument("--gens", required=True)
    method(sp)

    sp = add("verify", cmd_verify, "check every degree bound on an instance or a corpus file")
    sp.add_argument("--corpus", default=None)
    sp.add_argument("--gens", default="")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--hilbert-degree", type=int, default=10)

    sp = add("gen-corpus", cmd_gen_corpus, "write a seeded instance corpus", algebra=False)
    defaults = CorpusSizes()
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.add_argument("--max-vars", type=int, default=defaults.max_vars)
    sp.add_argument("--max-degree", type=int, default=defaults.max_degree)
    sp.add_argument("--max-gens", type=int, default=defaults.max_gens)
    sp.add_argument("--per-algebra", type=int, default=defaults.per_algebra)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = Output(args.json, args.command)
    start = time.perf_counter()
    try:
        code = args.fn(args, out)
    except ValidationError as exc:
        stderr.write(f"error: invalid algebra: {exc}\n")
        return EXIT_VALIDATION
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (SemanticError, ValueError, ZeroDivisionError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_SEMANTIC
    if args.timing:
        out.put("seconds", round(time.perf_counter() - start, 6), f"time: {time.perf_counter() - start:.3f}s")
    out.emit(stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
