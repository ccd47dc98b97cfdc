"""Operator-closure engine: fixed points, saturation, subalgebra comparison."""

import random

from jacring.closure import (
    GpbAmbient,
    JacAmbient,
    compare_subalgebras,
    compute_closure,
    gpb_operator_family,
    jac_operator_family,
)
from jacring.gpb import GEOMETRIC, GpbContext, h_class, pi_pullback, sy_class
from jacring.jacobian import JacContext, w_class


def test_theta_closure_is_theta_powers():
    ctx = JacContext(3)
    result = compute_closure([ctx.theta], jac_operator_family(), JacAmbient(ctx))
    assert result.dim == ctx.genus + 1
    assert result.saturated
    assert result.degree_dims == {2 * k: 1 for k in range(ctx.genus + 1)}
    # membership: every theta power is inside, a lone generator is not
    from jacring.exterior import wedge_power
    from jacring.jacobian import JacClass

    assert result.contains(JacClass(ctx, wedge_power(ctx.theta.value, 2)))
    from jacring.exterior import ExtClass

    gen0 = JacClass(ctx, ExtClass(ctx.n, {1: 1}))
    assert not result.contains(gen0)


def test_closure_order_independent():
    ctx = JacContext(3)
    gens = [w_class(ctx, i) for i in range(1, ctx.genus)]
    base = compute_closure(gens, jac_operator_family(), JacAmbient(ctx))
    rng = random.Random(0)
    for _ in range(3):
        shuffled = list(gens)
        rng.shuffle(shuffled)
        again = compute_closure(shuffled, jac_operator_family(), JacAmbient(ctx))
        assert again.dim == base.dim
        assert again.degree_dims == base.degree_dims
        for b in base.basis:
            assert again.contains(b)


def test_closure_without_generating_ops_is_plain_span():
    # the span is seeded with the unit, so no-op closure is span{1, theta}
    ctx = JacContext(2)
    result = compute_closure([ctx.theta], jac_operator_family(names=()), JacAmbient(ctx))
    assert result.dim == 2
    assert result.iterations == 1
    assert result.saturated


def test_compare_subalgebras_relations():
    ctx = JacContext(2)
    ambient = JacAmbient(ctx)
    small = compute_closure([ctx.theta], jac_operator_family(names=("wedge",)), ambient)
    big = compute_closure([ctx.theta], jac_operator_family(), ambient)
    rel_eq, _ = compare_subalgebras(big, big)
    assert rel_eq == "equal"
    rel, table = compare_subalgebras(big, small)
    assert rel in ("equal", "B<A")
    # the wedge-closure of theta misses the unit, the full closure has it
    assert big.contains(ctx.one())
    if not small.contains(ctx.one()):
        assert rel == "B<A"
    from jacring.exterior import ExtClass
    from jacring.jacobian import JacClass

    gen0 = JacClass(ctx, ExtClass(ctx.n, {1: 1}))
    gen1 = JacClass(ctx, ExtClass(ctx.n, {2: 1}))
    span_a = compute_closure([gen0], jac_operator_family(names=()), ambient)
    span_b = compute_closure([gen1], jac_operator_family(names=()), ambient)
    rel2, _ = compare_subalgebras(span_a, span_b)
    assert rel2 == "incomparable"


def test_gpb_closure_matches_product_algebra():
    g = 2
    jc = JacContext(g)
    ctx = GpbContext(jc)
    gens = [sy_class(ctx), h_class(ctx)] + [
        pi_pullback(ctx, w_class(jc, i)) for i in range(1, g)
    ]
    full = compute_closure(gens, gpb_operator_family(GEOMETRIC), GpbAmbient(ctx))
    algebra = compute_closure(
        gens, gpb_operator_family(GEOMETRIC, names=("wedge",)), GpbAmbient(ctx)
    )
    relation, table = compare_subalgebras(full, algebra)
    assert relation == "equal"
    assert full.saturated
    assert full.dim == 6
