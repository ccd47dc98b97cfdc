"""Command-line interface: expression evaluation, the claims audit, closure
computations and reference tables.

Exit codes: 0 success, 1 refuted claims under --strict, 2 usage error
(including expression syntax and sort errors).
"""

from __future__ import annotations

import argparse
import sys

from . import gpb as G
from . import jacobian as J
from .audit import CLAIM_IDS, render_report, run_audit
from .closure import (
    GpbAmbient,
    JacAmbient,
    compare_subalgebras,
    compute_closure,
    gpb_operator_family,
    jac_operator_family,
)
from .errors import ShapeError
from .parser import (
    EvalContext,
    ExprSyntaxError,
    SortError,
    eval_expr,
    format_value,
    parse_expr,
)
from .render import format_gpb, format_jac, format_rat

ALL_OPS = ("wedge", "pontryagin", "fourier", "nstar", "nlow")


class UsageError(Exception):
    pass


def _parse_genus_list(text):
    """Accept '2', '1,3', '1..4' and combinations thereof."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    if not out or any(g < 1 for g in out):
        raise UsageError(f"invalid genus list {text!r}")
    return out


def _eval_context(args):
    preset = getattr(args, "preset", G.GEOMETRIC)
    twist = shift = None
    plain = EvalContext(args.genus, preset)
    for attr, name in (("twist", "twist"), ("shift", "shift")):
        text = getattr(args, attr, None)
        if text is None:
            continue
        value = eval_expr(parse_expr(text), plain)
        if not isinstance(value, J.JacClass):
            raise UsageError(f"--{name} must evaluate to a class on the Jacobian")
        if attr == "twist":
            twist = value
        else:
            shift = value
    return EvalContext(args.genus, preset, twist=twist, shift=shift)


def cmd_eval(args):
    ctx = _eval_context(args)
    value = eval_expr(parse_expr(args.expression), ctx)
    print(format_value(value))
    return 0


def cmd_audit(args):
    genus = _parse_genus_list(args.genus)
    presets = tuple(p.strip() for p in args.preset.split(","))
    claims = None
    if args.claims:
        claims = [c.strip() for c in args.claims.split(",")]
        unknown = set(claims) - set(CLAIM_IDS)
        if unknown:
            raise UsageError(f"unknown claims: {', '.join(sorted(unknown))}")
    report = run_audit(
        genus,
        presets=presets,
        claim_ids=claims,
        seed=args.seed,
        budget=args.budget,
        timings=args.timings,
    )
    print(render_report(report, "json" if args.json else "text"))
    if args.strict and report.refuted():
        return 1
    return 0


def _closure_generators(text, ctx):
    """Expand a generator list: 'W' -> W[1]..W[g-1], 'Wt' -> Wt[0]..Wt[g],
    anything else is a DSL expression."""
    g = ctx.jac.genus
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk == "W":
            out.extend(J.w_class(ctx.jac, i) for i in range(1, g))
        elif chunk == "piW":
            out.extend(
                G.pi_pullback(ctx.gpb, J.w_class(ctx.jac, i)) for i in range(1, g)
            )
        elif chunk == "Wt":
            out.extend(G.wtilde(ctx.gpb, d) for d in range(g + 1))
        else:
            out.append(eval_expr(parse_expr(chunk), ctx))
    sorts = {type(x).__name__ for x in out}
    if len(sorts) > 1:
        raise UsageError(f"generators live in different models: {sorted(sorts)}")
    if not out:
        raise UsageError("empty generator list")
    return out


def _closure_setup(classes, ops_text, ctx, preset):
    names = ALL_OPS if ops_text.strip() == "all" else tuple(
        o.strip() for o in ops_text.split(",")
    )
    if isinstance(classes[0], G.GpbClass):
        return GpbAmbient(ctx.gpb), gpb_operator_family(preset, names=names)
    return JacAmbient(ctx.jac), jac_operator_family(names=names)


def cmd_closure(args):
    ctx = _eval_context(args)
    gens = _closure_generators(args.generators, ctx)
    ambient, ops = _closure_setup(gens, args.ops, ctx, args.preset)
    result = compute_closure(gens, ops, ambient)
    print(f"closure dimension: {result.dim}")
    print(f"iterations: {result.iterations}, saturated: {result.saturated}")
    for k in sorted(result.degree_dims):
        print(f"  exterior degree {k}: dim {result.degree_dims[k]}")
    if args.compare_with:
        other_gens = _closure_generators(args.compare_with, ctx)
        other_ambient, wedge_only = _closure_setup(other_gens, "wedge", ctx, args.preset)
        if type(other_ambient) is not type(ambient):
            raise UsageError("comparison generators live in a different model")
        other = compute_closure(other_gens, wedge_only, other_ambient)
        relation, table = compare_subalgebras(result, other)
        print(f"comparison with product subalgebra: {relation}")
        for k in sorted(table):
            a, b = table[k]
            print(f"  exterior degree {k}: {a} vs {b}")
    return 0


def cmd_table(args):
    ctx = _eval_context(args)
    g = args.genus
    print(f"genus {g}")
    print("Brill-Noether classes on the Jacobian:")
    for i in range(g + 1):
        print(f"  W[{i}] = {format_jac(J.w_class(ctx.jac, i))}")
    print("extended classes on the bundle:")
    for d in range(g + 1):
        print(f"  Wt[{d}] = {format_gpb(G.wtilde(ctx.gpb, d))}")
    print("pairing matrix pair(W[i], W[j]):")
    header = "      " + " ".join(f"{f'W[{j}]':>6}" for j in range(g + 1))
    print(header)
    for i in range(g + 1):
        row = " ".join(
            f"{format_rat(J.pair(J.w_class(ctx.jac, i), J.w_class(ctx.jac, j))):>6}"
            for j in range(g + 1)
        )
        print(f"{f'W[{i}]':>6} {row}")
    return 0


def build_arg_parser():
    ap = argparse.ArgumentParser(
        prog="jacring",
        description="Exact calculus on Jacobian cohomology and its P1-bundle extension.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_model_opts(p):
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--preset", choices=G.PRESETS, default=G.GEOMETRIC)
        p.add_argument("--twist", help="codim-1 expression for the bundle twist")
        p.add_argument("--shift", help="codim-1 expression for the section shift")

    pe = sub.add_parser("eval", help="evaluate a DSL expression")
    add_model_opts(pe)
    pe.add_argument("expression")
    pe.set_defaults(func=cmd_eval)

    pa = sub.add_parser("audit", help="run the claims audit")
    pa.add_argument("--genus", default="1..3", help="e.g. 2 or 1,3 or 1..4")
    pa.add_argument("--preset", default=",".join(G.PRESETS))
    pa.add_argument("--json", action="store_true")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--claims", help="comma-separated claim ids")
    pa.add_argument("--strict", action="store_true", help="exit 1 on any refuted claim")
    pa.add_argument("--budget", type=float, help="time budget in seconds")
    pa.add_argument("--timings", action="store_true", help="include per-claim millis")
    pa.set_defaults(func=cmd_audit)

    pc = sub.add_parser("closure", help="operator-closure computation")
    add_model_opts(pc)
    pc.add_argument("--generators", required=True)
    pc.add_argument("--ops", default="all")
    pc.add_argument("--compare-with", dest="compare_with")
    pc.set_defaults(func=cmd_closure)

    pt = sub.add_parser("table", help="print distinguished classes and pairings")
    add_model_opts(pt)
    pt.set_defaults(func=cmd_table)
    return ap


def main(argv=None):
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ExprSyntaxError, SortError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
