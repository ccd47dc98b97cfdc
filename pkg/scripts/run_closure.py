#!/usr/bin/env python3
"""Compare the operator closure of the divisor generators against the
product subalgebra generated by the special subvariety classes, on both the
Jacobian and its bundle extension, over a range of genera."""

import argparse

from jacring.closure import (
    GpbAmbient,
    JacAmbient,
    compare_subalgebras,
    compute_closure,
    gpb_operator_family,
    jac_operator_family,
)
from jacring.gpb import PRESETS, GpbContext, h_class, pi_pullback, sy_class
from jacring.jacobian import JacContext, w_class


def jacobian_run(g):
    ctx = JacContext(g)
    closure = compute_closure([ctx.theta], jac_operator_family(), JacAmbient(ctx))
    target = compute_closure(
        [w_class(ctx, i) for i in range(1, g)] or [ctx.one()],
        jac_operator_family(names=("wedge",)),
        JacAmbient(ctx),
    )
    relation, table = compare_subalgebras(closure, target)
    print(f"genus {g} (Jacobian): closure dim {closure.dim}, "
          f"subvariety-subalgebra dim {target.dim}, relation {relation}")
    for k in sorted(table):
        a, b = table[k]
        print(f"  degree {k}: {a} vs {b}")


def bundle_run(g, preset):
    jc = JacContext(g)
    ctx = GpbContext(jc)
    gens = [sy_class(ctx), h_class(ctx)]
    gens += [pi_pullback(ctx, w_class(jc, i)) for i in range(1, g)]
    closure = compute_closure(gens, gpb_operator_family(preset), GpbAmbient(ctx))
    target = compute_closure(
        gens, gpb_operator_family(preset, names=("wedge",)), GpbAmbient(ctx)
    )
    relation, table = compare_subalgebras(closure, target)
    print(f"genus {g} (bundle, {preset}): closure dim {closure.dim}, "
          f"product-subalgebra dim {target.dim}, relation {relation}")
    for k in sorted(table):
        a, b = table[k]
        print(f"  degree {k}: {a} vs {b}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-genus", type=int, default=3)
    args = ap.parse_args()
    for g in range(2, args.max_genus + 1):
        jacobian_run(g)
        for preset in PRESETS:
            bundle_run(g, preset)


if __name__ == "__main__":
    main()
