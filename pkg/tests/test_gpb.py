"""The P1-bundle extension: section classes, extended operators, presets."""

import random
from fractions import Fraction

import pytest

from jacring.errors import UnsupportedClassError
from jacring.gpb import (
    GEOMETRIC,
    PAPER,
    GpbClass,
    GpbContext,
    ext_fourier,
    ext_fourier_base_formula,
    ext_involution,
    ext_mult_pullback,
    ext_mult_pushforward,
    ext_pontryagin,
    fm_pullpush,
    gpb_mul,
    h_class,
    pi_pullback,
    pi_pushforward,
    sy_class,
    sz_class,
    wtilde,
)
from jacring.jacobian import JacContext, fourier, point_class, w_class
from jacring.sampling import random_gpb_class, random_jac_class, random_jac_divisor


def make_ctx(g, twist=False, shift=False, seed=0):
    jc = JacContext(g)
    rng = random.Random(seed)
    return GpbContext(
        jc,
        twist_a=random_jac_divisor(jc, rng) if twist else None,
        section_shift=random_jac_divisor(jc, rng) if shift else None,
    )


def test_h_square_relation():
    ctx = make_ctx(2, twist=True)
    h = h_class(ctx)
    assert gpb_mul(h, h) == GpbClass(ctx, ctx.jac.zero(), ctx.twist_a)
    # with zero twist H is 2-nilpotent
    ctx0 = make_ctx(2)
    assert gpb_mul(h_class(ctx0), h_class(ctx0)).is_zero()


def test_sections_are_disjoint():
    # the two coordinate sections are disjoint at zero section shift
    for twist in (False, True):
        ctx = make_ctx(2, twist=twist, seed=9)
        assert gpb_mul(sy_class(ctx), sz_class(ctx)).is_zero()


def test_pi_pushforward_pullback():
    ctx = make_ctx(2)
    rng = random.Random(1)
    x = random_jac_class(ctx.jac, rng)
    assert pi_pushforward(pi_pullback(ctx, x)).is_zero()
    assert pi_pushforward(gpb_mul(h_class(ctx), pi_pullback(ctx, x))) == x


def test_gpb_mul_commutative_on_even_part():
    ctx = make_ctx(2, twist=True, shift=True, seed=4)
    from jacring.sampling import random_jac_even_class

    rng = random.Random(2)
    for _ in range(5):
        a = GpbClass(
            ctx,
            random_jac_even_class(ctx.jac, rng),
            random_jac_even_class(ctx.jac, rng),
        )
        b = GpbClass(
            ctx,
            random_jac_even_class(ctx.jac, rng),
            random_jac_even_class(ctx.jac, rng),
        )
        assert gpb_mul(a, b) == gpb_mul(b, a)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_wtilde_formula(g):
    ctx = make_ctx(g)
    jc = ctx.jac
    for d in range(g + 1):
        expected = gpb_mul(
            sy_class(ctx), pi_pullback(ctx, w_class(jc, g - d))
        ) + pi_pullback(ctx, w_class(jc, g - d - 1))
        assert wtilde(ctx, d) == expected
    # the d = 0 class is the extended divisor Sy + pi^* W_{g-1}
    assert wtilde(ctx, 0) == sy_class(ctx) + pi_pullback(ctx, w_class(jc, g - 1))


def test_wtilde_codimension():
    g = 3
    ctx = make_ctx(g)
    for d in range(g + 1):
        xi = wtilde(ctx, d)
        # codimension d + 1 on the (g+1)-dimensional total space
        assert xi.degrees() == [2 * (d + 1)]


@pytest.mark.parametrize("preset", [GEOMETRIC, PAPER])
def test_ext_mult_roundtrip(preset):
    ctx = make_ctx(2)
    rng = random.Random(8)
    xi = random_gpb_class(ctx, rng)
    g = ctx.genus
    exponent = 2 * g + 1 if preset == GEOMETRIC else 2 * g
    for n in (2, 3, -1):
        push_pull = ext_mult_pushforward(n, ext_mult_pullback(n, xi, preset), preset)
        assert push_pull == xi.scale(Fraction(n) ** exponent)


def test_paper_preset_undefined_at_zero():
    ctx = make_ctx(2)
    with pytest.raises(ValueError):
        ext_mult_pushforward(0, h_class(ctx), PAPER)


def test_ext_involution_consistency():
    ctx = make_ctx(2)
    rng = random.Random(12)
    xi = random_gpb_class(ctx, rng)
    for preset in (GEOMETRIC, PAPER):
        assert ext_involution(ext_involution(xi, preset), preset) == xi


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("shift", [False, True])
def test_divisor_pullpush_matches_base_kernel(g, shift):
    ctx = make_ctx(g, shift=shift, seed=21)
    # the extended correspondence kernel equals the base kernel pulled back,
    # tested via the doubled-model pullback of the extended divisor recipe
    from jacring.gpb import ext_poincare_kernel
    from jacring.jacobian import poincare_kernel

    ell = poincare_kernel(ctx.jac)
    ext = ext_poincare_kernel(ctx)
    assert ext.c10.is_zero() and ext.c01.is_zero() and ext.c11.is_zero()
    assert ext.c00 == ell


def test_fm_pullpush_divisors_only():
    ctx = make_ctx(2)
    rng = random.Random(3)
    d = random_jac_divisor(ctx.jac, rng)
    fm_pullpush(pi_pullback(ctx, d))  # divisor-level input is fine
    fm_pullpush(sy_class(ctx))
    with pytest.raises(UnsupportedClassError):
        fm_pullpush(GpbClass(ctx, ctx.jac.zero(), ctx.jac.theta))


@pytest.mark.parametrize("g", [1, 2])
def test_ext_fourier_closed_form(g):
    ctx = make_ctx(g)
    rng = random.Random(14)
    for _ in range(4):
        xi = random_gpb_class(ctx, rng)
        assert ext_fourier(xi) == ext_fourier_base_formula(xi)
    # only the fibre part contributes: F~ (H . pi^* x) = pi^* F(x)
    x = random_jac_class(ctx.jac, rng)
    lifted = gpb_mul(h_class(ctx), pi_pullback(ctx, x))
    assert ext_fourier(lifted) == pi_pullback(ctx, fourier(x))


def test_ext_pontryagin_geometric_unit():
    ctx = make_ctx(2)
    rng = random.Random(6)
    unit = gpb_mul(h_class(ctx), pi_pullback(ctx, point_class(ctx.jac)))
    xi = gpb_mul(h_class(ctx), pi_pullback(ctx, random_jac_class(ctx.jac, rng)))
    assert ext_pontryagin(unit, xi, GEOMETRIC) == xi


def test_ext_pontryagin_presets_differ():
    ctx = make_ctx(2)
    a = pi_pullback(ctx, ctx.jac.theta)
    b = pi_pullback(ctx, ctx.jac.theta)
    assert ext_pontryagin(a, b, GEOMETRIC).is_zero()
    assert not ext_pontryagin(a, b, PAPER).is_zero()


def test_twist_must_be_divisor():
    jc = JacContext(2)
    with pytest.raises(ValueError):
        GpbContext(jc, twist_a=point_class(jc))
