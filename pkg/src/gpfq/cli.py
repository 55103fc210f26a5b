"""Command-line front end.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 1
computation failure (budget or precision, or a failing table cell), 2 usage
error. Identical invocations produce bit-identical output.

Budget caps are overridable through environment variables:
GPFQ_ENUM_BUDGET (polynomial enumerations), GPFQ_VERTEX_BUDGET (extremal
search vertices), GPFQ_RN_BUDGET (right endpoint of the r_n search).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import density, progfree, tables
from .errors import Error
from .factor import factorize
from .ff import make_field
from .intarith import prime_power
from .numeric import render_decimal
from .polyring import enumerate_polys, enumerate_upto, format_poly, parse_poly


def _env_budget(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _field_for(parser, args):
    pk = prime_power(args.q)
    if pk is None:
        parser.error(f"--q {args.q} is not a prime power")
    p, k = pk
    modulus = None
    if getattr(args, "modulus", None):
        try:
            modulus = tuple(int(c) for c in args.modulus.split(","))
        except ValueError:
            parser.error(f"--modulus {args.modulus!r} is not a comma-separated integer list")
    try:
        return make_field(p, k, modulus)
    except Error as exc:
        parser.error(f"invalid field: {exc}")


def _require_prime_power(parser, q):
    if prime_power(q) is None:
        parser.error(f"--q {q} is not a prime power")


def _emit(args, text_lines, json_obj):
    if getattr(args, "json", False):
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_density(parser, args):
    _require_prime_power(parser, args.q)
    q, digits = args.q, args.digits
    if args.kind == "greedy":
        if args.depth is not None:
            iv = density.greedy_density_interval(q, args.depth)
            report = density.DensityReport(
                q=q, kind="greedy", value=iv, rendered=render_decimal(iv, digits),
                digits=digits, depth=args.depth,
            )
        else:
            report = density.greedy_density(q, digits)
    elif args.kind == "lower":
        if args.depth is not None:
            iv = density.mq_interval(q, args.depth)
            report = density.DensityReport(
                q=q, kind="lower_mq", value=iv, rendered=render_decimal(iv, digits),
                digits=digits, depth=args.depth,
            )
        else:
            report = density.lower_bound_mq(q, digits)
    elif args.kind == "upper-simple":
        exact = density.upper_bound_simple(q, args.terms)
        report = density.DensityReport(
            q=q, kind="upper_simple", value=exact, rendered=render_decimal(exact, digits),
            digits=digits, terms=args.terms,
        )
    else:  # upper-no
        report = density.upper_bound_no(q, digits, budget=_env_budget("GPFQ_RN_BUDGET", density.DEFAULT_RN_BUDGET))
    _emit(args, [report.rendered], {"command": "density", **report.to_json()})
    return 0


def _cmd_tables(parser, args):
    cells, seconds = tables.verify_table_timed(args.which)
    all_pass = all(c.ok for c in cells)
    lines = [
        f"q={c.q} {c.column} expected={c.expected} computed={c.computed} "
        + ("PASS" if c.ok else f"FAIL interval=[{c.lo}, {c.hi}]")
        for c in cells
    ]
    lines.append(f"{sum(c.ok for c in cells)}/{len(cells)} cells PASS")
    obj = {
        "command": "tables",
        "which": args.which,
        "all_pass": all_pass,
        "cells": [
            {
                "q": c.q,
                "column": c.column,
                "expected": c.expected,
                "computed": c.computed,
                "ok": c.ok,
            }
            for c in cells
        ],
    }
    _emit(args, lines, obj)
    print(f"table {args.which} verified in {seconds:.2f}s", file=sys.stderr)
    return 0 if all_pass else 1


def _cmd_figure1(parser, args):
    rows = density.figure1_data(args.qmax)
    out_lines = ["q,density"] + [f"{q},{val}" for q, val in rows]
    text = "\n".join(out_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_checkpoint(parser, args):
    _require_prime_power(parser, args.q)
    value = density.checkpoint_density(args.q, args.k)
    obj = {
        "command": "checkpoint",
        "q": args.q,
        "k": args.k,
        "exact": str(value),
    }
    _emit(args, [str(value)], obj)
    return 0


def _cmd_empirical(parser, args):
    spec = _field_for(parser, args)
    value = density.empirical_greedy_density(
        spec, args.max_degree, budget=_env_budget("GPFQ_ENUM_BUDGET", progfree.DEFAULT_ENUM_BUDGET)
    )
    obj = {
        "command": "empirical",
        "q": args.q,
        "max_degree": args.max_degree,
        "exact": str(value),
    }
    _emit(args, [str(value)], obj)
    return 0


def _cmd_rn(parser, args):
    table = density.rn_sequence(args.n, budget=_env_budget("GPFQ_RN_BUDGET", density.DEFAULT_RN_BUDGET))
    values = list(table)
    _emit(args, [" ".join(str(v) for v in values)],
          {"command": "rn", "n": args.n, "values": values})
    return 0


def _cmd_factor(parser, args):
    spec = _field_for(parser, args)
    try:
        f = parse_poly(spec, args.poly)
    except Error as exc:
        parser.error(f"bad polynomial {args.poly!r}: {exc}")
    fac = factorize(f, seed=args.seed)
    pieces = [str(fac.unit.code)]
    pieces += [
        f"({format_poly(prime)})" + (f"^{e}" if e > 1 else "")
        for prime, e in fac.parts
    ]
    text = " * ".join(pieces)
    obj = {
        "command": "factor",
        "q": args.q,
        "input": args.poly,
        "unit": fac.unit.code,
        "parts": [{"prime": format_poly(p), "exp": e} for p, e in fac.parts],
    }
    _emit(args, [text], obj)
    return 0


def _cmd_greedy(parser, args):
    spec = _field_for(parser, args)
    budget = _env_budget("GPFQ_ENUM_BUDGET", progfree.DEFAULT_ENUM_BUDGET)
    if args.action == "check":
        constructed = progfree.greedy_construct_bruteforce(spec, args.max_degree, budget)
        characterized = {f for f in enumerate_upto(spec, args.max_degree) if progfree.greedy_member(f)}
        extra = sorted(constructed - characterized)
        missing = sorted(characterized - constructed)
        witness = progfree.has_progression(constructed)
        witness_tol = progfree.has_progression(constructed, unit_tolerant=True)
        ok = not extra and not missing and witness is None and witness_tol is None
        lines = []
        if ok:
            lines.append(
                f"ok: {len(constructed)} members up to degree {args.max_degree} "
                "match the exponent characterization; no progression found"
            )
        else:
            for f in extra:
                lines.append(f"constructed but not characterized: {format_poly(f)}")
            for f in missing:
                lines.append(f"characterized but not constructed: {format_poly(f)}")
            if witness or witness_tol:
                w = witness or witness_tol
                lines.append(f"progression found: base={format_poly(w.base)} ratio={format_poly(w.ratio)}")
        obj = {
            "command": "greedy-check",
            "q": args.q,
            "max_degree": args.max_degree,
            "ok": ok,
            "members": len(constructed),
            "extra": [format_poly(f) for f in extra],
            "missing": [format_poly(f) for f in missing],
        }
        _emit(args, lines, obj)
        return 0 if ok else 1

    # enumerate
    counts = []
    members = []
    for d in range(args.max_degree + 1):
        at_d = [f for f in enumerate_polys(spec, d) if progfree.greedy_member(f)]
        counts.append(len(at_d))
        if not args.counts_only:
            members.extend(at_d)
    if args.counts_only:
        lines = [f"{d} {c}" for d, c in enumerate(counts)]
    else:
        lines = [format_poly(f) for f in members]
    obj = {
        "command": "greedy-enumerate",
        "q": args.q,
        "max_degree": args.max_degree,
        "counts": counts,
    }
    if not args.counts_only:
        obj["members"] = [format_poly(f) for f in members]
    _emit(args, lines, obj)
    return 0


def _cmd_progcheck(parser, args):
    spec = _field_for(parser, args)
    try:
        with open(args.file) as fh:
            texts = [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        parser.error(f"cannot read {args.file}: {exc}")
    polys = [parse_poly(spec, t) for t in texts]
    witness = progfree.has_progression(polys, unit_tolerant=args.unit_tolerant)
    if witness is None:
        lines = ["progression-free"]
        obj = {"command": "progcheck", "q": args.q, "progression_free": True, "witness": None}
    else:
        members = ", ".join(format_poly(g) for g in witness.members)
        lines = [
            f"progression: base={format_poly(witness.base)} "
            f"ratio={format_poly(witness.ratio)} members=[{members}]"
        ]
        obj = {
            "command": "progcheck",
            "q": args.q,
            "progression_free": False,
            "witness": {
                "base": format_poly(witness.base),
                "ratio": format_poly(witness.ratio),
                "members": [format_poly(g) for g in witness.members],
            },
        }
    _emit(args, lines, obj)
    return 0


def _cmd_extremal(parser, args):
    spec = _field_for(parser, args)
    budget = args.budget or _env_budget("GPFQ_VERTEX_BUDGET", progfree.DEFAULT_VERTEX_BUDGET)
    size, witness = progfree.max_progression_free_subset(spec, args.max_degree, budget)
    lines = [f"size={size}", "witness: " + ", ".join(format_poly(f) for f in witness)]
    obj = {
        "command": "extremal",
        "q": args.q,
        "max_degree": args.max_degree,
        "size": size,
        "witness": [format_poly(f) for f in witness],
    }
    _emit(args, lines, obj)
    return 0


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_q(p, required=True):
    p.add_argument("--q", type=int, required=required, help="field order, a prime power")


def _add_field_opts(p):
    _add_q(p)
    p.add_argument("--modulus", help="comma-separated modulus coefficients, constant first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpfq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="certified density and bound values")
    p.add_argument("kind", choices=["greedy", "lower", "upper-simple", "upper-no"])
    _add_q(p)
    p.add_argument("--digits", type=int, default=6)
    p.add_argument("--depth", type=int, help="fixed product depth instead of adaptive")
    p.add_argument("--terms", type=int, help="finite progression families for upper-simple")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("tables", help="verify the published tables cell by cell")
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("figure1", help="density against q as CSV")
    p.add_argument("--qmax", type=int, default=130)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_figure1)

    p = sub.add_parser("checkpoint", help="exact checkpoint density at N_k")
    _add_q(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_checkpoint)

    p = sub.add_parser("empirical", help="exact finite-stage greedy density")
    _add_field_opts(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_empirical)

    p = sub.add_parser("rn", help="least endpoints r_n for AP-free subsets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rn)

    p = sub.add_parser("factor", help="factor a polynomial over F_q")
    _add_field_opts(p)
    p.add_argument("poly", help="polynomial text, e.g. 'x^3+x+1'")
    p.add_argument("--seed", type=int, help="override the splitting seed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("greedy", help="greedy progression-free set operations")
    psub = p.add_subparsers(dest="action", required=True)
    pc = psub.add_parser("check", help="brute-force construction vs characterization")
    _add_field_opts(pc)
    pc.add_argument("--max-degree", type=int, required=True)
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_greedy)
    pe = psub.add_parser("enumerate", help="list greedy-set members")
    _add_field_opts(pe)
    pe.add_argument("--max-degree", type=int, required=True)
    pe.add_argument("--counts-only", action="store_true")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("progcheck", help="search a polynomial list for a progression")
    _add_field_opts(p)
    p.add_argument("--file", required=True, help="one polynomial text per line")
    p.add_argument("--unit-tolerant", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_progcheck)

    p = sub.add_parser("extremal", help="exact maximum progression-free subset")
    _add_field_opts(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--budget", type=int, help="vertex budget (default 40)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(parser, args)
    except SystemExit as exc:  # argparse usage error (2) or --help (0)
        return exc.code if isinstance(exc.code, int) else 2
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
