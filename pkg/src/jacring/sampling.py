"""Seeded random class generators for sampled-domain checks."""

from __future__ import annotations

from fractions import Fraction

from .exterior import ExtClass
from .gpb import GpbClass
from .jacobian import JacClass


def random_rat(rng):
    num = rng.choice([n for n in range(-9, 10) if n != 0])
    den = rng.randint(1, 4)
    return Fraction(num, den)


def random_jac_class(ctx, rng, nterms=6):
    """Sparse random class with exact rational coefficients."""
    terms = {}
    for _ in range(nterms):
        terms[rng.randrange(1 << ctx.n)] = random_rat(rng)
    return JacClass(ctx, ExtClass(ctx.n, terms))


def random_jac_even_class(ctx, rng, nterms=6):
    """Sparse random class supported in even exterior degrees (the algebraic
    part of the model, where both products are commutative)."""
    terms = {}
    tries = 0
    while len(terms) < nterms and tries < 20 * nterms:
        tries += 1
        m = rng.randrange(1 << ctx.n)
        if m.bit_count() % 2 == 0:
            terms[m] = random_rat(rng)
    return JacClass(ctx, ExtClass(ctx.n, terms))


def random_jac_divisor(ctx, rng):
    """Random pure codimension-1 class."""
    terms = {}
    for i in range(ctx.n):
        for j in range(i + 1, ctx.n):
            if rng.random() < 0.5:
                terms[(1 << i) | (1 << j)] = random_rat(rng)
    return JacClass(ctx, ExtClass(ctx.n, terms))


def random_gpb_class(ctx, rng, nterms=4):
    return GpbClass(
        ctx,
        random_jac_class(ctx.jac, rng, nterms),
        random_jac_class(ctx.jac, rng, nterms),
    )
