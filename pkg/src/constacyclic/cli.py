"""Command-line front end.

Element tokens: an integer v in [0, q) is the element c0 + c1 p + ... (its
coordinate vector in base p), ``b^k`` is generator**k, and a leading minus
sign negates (so ``-1`` is minus one in every field).  Polynomials are
comma-separated element tokens, constant term first.

Exit status: 0 on success, 1 on errors or failed verification, 2 when the
two self-duality criteria disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import constacode as cc
from .cyclo_factor import factor_binomial, factor_grid
from .errors import ConstacyclicError
from .field_core import FieldSpec, Felt, element_order, make_field
from .polyring import Poly
from .selfdual_neg import (
    consistency_report,
    enumerate_selfdual,
    paper_hypothesis_holds,
    selfdual_exists_paper,
    selfdual_exists_structural,
)

FORMAT_VERSION = "1"
EXIT_DISAGREE = 2


class UsageError(Exception):
    pass


def load_schema() -> dict:
    text = resources.files("constacyclic").joinpath("schema/output.v1.json").read_text()
    return json.loads(text)


# -- token encoding ----------------------------------------------------------

def parse_element(field: FieldSpec, token: str) -> Felt:
    token = token.strip()
    if token.startswith("-"):
        return -parse_element(field, token[1:])
    if token.startswith("b^"):
        return field.gen_pow(int(token[2:]))
    try:
        v = int(token)
    except ValueError:
        raise UsageError(f"bad element token {token!r}") from None
    if not 0 <= v < field.q:
        raise UsageError(f"element {v} outside [0, {field.q})")
    return field.from_int(v)


def parse_poly(field: FieldSpec, text: str) -> Poly:
    return Poly(field, [parse_element(field, t) for t in text.split(",") if t.strip()])


def poly_json(f: Poly) -> list[int]:
    return list(f.raw)


def poly_from_json(field: FieldSpec, vals) -> Poly:
    return Poly(field, [field.from_int(v) for v in vals])


def field_json(field: FieldSpec) -> dict:
    return {
        "p": field.p,
        "s": field.s,
        "q": field.q,
        "modulus": list(field.modulus),
        "generator": field.generator.value,
    }


def code_json(c: cc.ConstaCode, exps=None) -> dict:
    out = {
        "n": c.n,
        "lambda": c.lam.value,
        "dim": c.dim,
        "gen": poly_json(c.gen),
        "shape": {"a": c.shape.a, "m": c.shape.m, "r": c.shape.r},
    }
    if exps is not None:
        out["exponents"] = list(exps)
    return out


# -- commands ----------------------------------------------------------------

def _field(args) -> FieldSpec:
    modulus = None
    if args.modulus:
        modulus = [int(t) for t in args.modulus.split(",")]
    return make_field(args.p, args.s, modulus)


def _shape(field, n) -> cc.CodeShape:
    return cc.shape_decompose(n, field.p)


def cmd_field_info(args, field):
    return {"generator_order": element_order(field.generator),
            "generator_coords": list(field.generator.coeffs)}, 0


def cmd_factor(args, field):
    fl = factor_binomial(field, args.m, parse_element(field, args.c))
    return {
        "target": poly_json(fl.target),
        "factors": [
            {"poly": poly_json(f), "degree": f.degree, "multiplicity": e, "text": repr(f)}
            for f, e in fl.factors
        ],
        "product_check": fl.product() == fl.target,
    }, 0


def cmd_grid(args, field):
    g = factor_grid(field, args.a, args.m, parse_element(field, args.scale), args.variant)
    return {
        "a": g.a,
        "m": g.m,
        "variant": g.variant,
        "twist_root": g.twist_root.value,
        "scale": g.scale.value,
        "target": poly_json(g.target),
        "entries": [
            {"k": k, "i": i, "poly": poly_json(f), "degree": f.degree, "text": repr(f)}
            for (k, i), f in sorted(g.grid.items())
        ],
        "product_check": g.product() == g.target,
    }, 0


def _code_from_args(args, field) -> tuple[cc.ConstaCode, list | None]:
    lam = parse_element(field, args.lam)
    shape = _shape(field, args.n)
    if getattr(args, "gen", None):
        return cc.code_from_generator(field, args.n, lam, parse_poly(field, args.gen)), None
    if getattr(args, "exps", None):
        exps = [int(t) for t in args.exps.split(",")]
        ev = cc.exponent_vector(field, shape, lam, exps)
        return cc.build_code(field, shape, lam, ev), exps
    raise UsageError("give the code with --gen or --exps")


def cmd_codes_count(args, field):
    lam = parse_element(field, args.lam)
    shape = _shape(field, args.n)
    en = cc.enumerate_codes(field, shape, lam)
    return {
        "n": args.n,
        "lambda": lam.value,
        "shape": {"a": shape.a, "m": shape.m, "r": shape.r},
        "base": [poly_json(f) for f in en.base],
        "count": en.count,
    }, 0


def cmd_codes_list(args, field):
    lam = parse_element(field, args.lam)
    shape = _shape(field, args.n)
    en = cc.enumerate_codes(field, shape, lam, args.limit)
    if args.limit is None and en.count > args.threshold:
        raise UsageError(f"{en.count} codes; pass --limit to list them")
    codes = []
    for ev in en.exponent_vectors():
        codes.append(code_json(cc.build_code(field, shape, lam, ev), ev.exps))
    return {"count": en.count, "listed": len(codes), "codes": codes}, 0


def cmd_codes_dual(args, field):
    c, exps = _code_from_args(args, field)
    d = cc.dual(c)
    return {"code": code_json(c, exps), "dual": code_json(d),
            "self_dual": cc.is_self_dual(c)}, 0


def cmd_codes_equiv(args, field):
    c, exps = _code_from_args(args, field)
    res = cc.cyclic_equivalent(c)
    if res is None:
        return {"code": code_json(c, exps), "equivalent": False}, 0
    mono, cyc = res
    return {
        "code": code_json(c, exps),
        "equivalent": True,
        "delta": mono.delta.inv().value,
        "map_scalar": mono.delta.value,
        "cyclic": code_json(cyc),
    }, 0


def _verdict_json(v) -> dict:
    out = {"exists": v.exists, "criterion": v.criterion}
    if v.obstruction:
        out["obstruction"] = [poly_json(f) for f in v.obstruction]
    if v.witness is not None:
        out["witness"] = code_json(v.witness)
    if v.ord_value is not None:
        out["ord_value"] = v.ord_value
    return out


def cmd_selfdual_exists(args, field):
    shape = _shape(field, args.n)
    payload = {"n": args.n, "criterion": args.criterion}
    code = 0
    if args.criterion == "structural":
        payload["structural"] = _verdict_json(selfdual_exists_structural(field, shape))
    elif args.criterion == "paper":
        payload["paper"] = _verdict_json(selfdual_exists_paper(field, shape))
    else:
        rep = consistency_report(field, shape)
        payload["structural"] = _verdict_json(selfdual_exists_structural(field, shape))
        if paper_hypothesis_holds(field, shape):
            payload["paper"] = _verdict_json(selfdual_exists_paper(field, shape))
        payload["oracle"] = rep.oracle
        payload["status"] = rep.status
        payload["conflicts"] = rep.conflicts
        if rep.status == "DISAGREE":
            code = EXIT_DISAGREE
    return payload, code


def cmd_selfdual_list(args, field):
    shape = _shape(field, args.n)
    en = enumerate_selfdual(field, shape, args.limit)
    if args.limit is None and en.count > args.threshold:
        raise UsageError(f"{en.count} codes; pass --limit to list them")
    codes = [code_json(c) for c in en]
    return {"count": en.count, "listed": len(codes), "codes": codes}, 0


def cmd_verify(args, field):
    from . import oracle

    c, exps = _code_from_args(args, field)
    checks = {"divides": (c.modulus() % c.gen).is_zero()}
    d = cc.dual(c)
    checks["dim_sum"] = c.dim + d.dim == c.n
    checks["dual_involution"] = cc.dual(d) == c
    if c.dim:
        G = cc.generator_rows(c)
        checks["dual_oracle"] = oracle.same_row_space(
            field, oracle.dual_basis(field, G, c.n), cc.generator_rows(d) if d.dim else []
        )
        checks["selfdual_agree"] = oracle.check_matrix_selfdual(G, field) == cc.is_self_dual(c)
    if field.q**c.dim <= args.bound:
        ws = oracle.codeword_set(c, args.bound)
        checks["shift_closure"] = oracle.check_shift_closure(ws, c.lam)
        checks["size"] = len(ws) == field.q**c.dim
        md = oracle.min_distance(c, bound=args.bound)
        min_d = None if md == float("inf") else md
    else:
        min_d = None
    payload = {"code": code_json(c, exps), "checks": checks, "min_distance": min_d,
               "passed": all(checks.values())}
    return payload, 0 if payload["passed"] else 1


# -- parser ------------------------------------------------------------------

def _common(p):
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--s", type=int, default=1, help="extension degree")
    p.add_argument("--modulus", help="comma-separated modulus coefficients, constant first")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--out", help="write output to FILE instead of stdout")


def _code_opts(p, need_code=False):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    if need_code:
        p.add_argument("--gen", help="generator polynomial tokens")
        p.add_argument("--exps", help="comma-separated exponents over the factor base")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="constacyclic", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fld = sub.add_parser("field").add_subparsers(dest="sub", required=True)
    p = fld.add_parser("info")
    _common(p)
    p.set_defaults(func=cmd_field_info, name="field info")

    p = sub.add_parser("factor", help="factor x^m - c")
    _common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", default="1")
    p.set_defaults(func=cmd_factor, name="factor")

    p = sub.add_parser("grid", help="twisted factorization of x^(2^a m) -/+ scale^(2^a m)")
    _common(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--scale", default="1")
    p.add_argument("--variant", choices=("all", "even", "odd"), default="all")
    p.set_defaults(func=cmd_grid, name="grid")

    codes = sub.add_parser("codes").add_subparsers(dest="sub", required=True)
    p = codes.add_parser("count")
    _common(p)
    _code_opts(p)
    p.set_defaults(func=cmd_codes_count, name="codes count")

    p = codes.add_parser("list")
    _common(p)
    _code_opts(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--threshold", type=int, default=1000)
    p.set_defaults(func=cmd_codes_list, name="codes list")

    p = codes.add_parser("dual")
    _common(p)
    _code_opts(p, need_code=True)
    p.set_defaults(func=cmd_codes_dual, name="codes dual")

    p = codes.add_parser("equiv")
    _common(p)
    _code_opts(p, need_code=True)
    p.set_defaults(func=cmd_codes_equiv, name="codes equiv")

    sd = codes.add_parser("selfdual").add_subparsers(dest="sd", required=True)
    p = sd.add_parser("exists")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--criterion", choices=("structural", "paper", "both"), default="structural")
    p.set_defaults(func=cmd_selfdual_exists, name="codes selfdual exists")

    p = sd.add_parser("list")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--threshold", type=int, default=1000)
    p.set_defaults(func=cmd_selfdual_list, name="codes selfdual list")

    p = sub.add_parser("verify", help="run the brute-force oracle on one code")
    _common(p)
    _code_opts(p, need_code=True)
    p.add_argument("--bound", type=int, default=20000)
    p.set_defaults(func=cmd_verify, name="verify")
    return parser


def _table(doc: dict) -> str:
    lines = [f"# {doc['command']}  GF({doc['field']['q']}) modulus={doc['field']['modulus']}"]
    for key, val in doc["payload"].items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            cols = list(val[0].keys())
            lines.append("  " + "\t".join(cols))
            for row in val:
                lines.append("  " + "\t".join(json.dumps(row.get(c)) for c in cols))
        else:
            lines.append(f"{key}: {json.dumps(val)}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        field = _field(args)
        payload, code = args.func(args, field)
    except (ConstacyclicError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    doc = {
        "format_version": FORMAT_VERSION,
        "command": args.name,
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "field": field_json(field),
        "payload": payload,
    }
    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = _table(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
