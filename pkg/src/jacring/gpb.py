"""The P1-bundle model over the Jacobian: A*(P) = A*(J) + H.A*(J).

A class on P is a pair (base, hpart) standing for pi^*base + H.pi^*hpart,
with the bundle relation H^2 = pi^*twist_a . H.  Classes on P x P carry four
components spanning 1, H1, H2, H1.H2 over J x J.

Extended multiplication operators and the extended Pontryagin product exist in
two presets: GEOMETRIC (rules derived from the fibrewise extension a -> a^n
and the pushforward through the blow-up of the section products) and PAPER
(exponents and compatibility rules forced by the stated eigenspace
decomposition).  The claims audit compares them; nothing here picks a winner
silently.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ShapeError, UnsupportedClassError
from .jacobian import (
    JacClass,
    ProductClass,
    fourier,
    mult_pullback,
    mult_pushforward,
    pontryagin,
    pullback,
    pushforward,
    w_class,
)

GEOMETRIC = "geometric"
PAPER = "paper"
PRESETS = (GEOMETRIC, PAPER)


def _check_preset(preset):
    if preset not in PRESETS:
        raise ShapeError(f"unknown preset {preset!r}; expected one of {PRESETS}")


class GpbContext:
    """P1-bundle ambient over a JacContext.

    twist_a is the codim-1 class in the relation H^2 = pi^*twist_a . H;
    section_shift is the codim-1 class with S_y = H + pi^*section_shift.  Both
    default to 0 (the algebraic-equivalence model), giving H^2 = 0 and
    S_y = S_z = H; S_z always carries the complementary shift so that the two
    sections stay disjoint: S_y . S_z = 0 under the bundle relation.
    """

    def __init__(self, jac, twist_a=None, section_shift=None):
        self.jac = jac
        self.twist_a = twist_a if twist_a is not None else jac.zero()
        self.section_shift = section_shift if section_shift is not None else jac.zero()
        for name, cls in (("twist_a", self.twist_a), ("section_shift", self.section_shift)):
            if not cls.is_zero() and cls.degrees() != [2]:
                raise ShapeError(f"{name} must be pure codimension 1")
        self._exp_ell_tilde = None

    @property
    def genus(self):
        return self.jac.genus

    def zero(self):
        return GpbClass(self, self.jac.zero(), self.jac.zero())

    def one(self):
        return GpbClass(self, self.jac.one(), self.jac.zero())

    def product_zero(self):
        z = self.jac.product_zero()
        return GpbProductClass(self, z, z, z, z)

    def __repr__(self):
        return f"GpbContext(genus={self.genus})"


class GpbClass:
    """pi^*base + H.pi^*hpart on P."""

    __slots__ = ("ctx", "base", "hpart")

    def __init__(self, ctx, base, hpart):
        self.ctx = ctx
        self.base = base
        self.hpart = hpart

    def _check(self, other):
        if not isinstance(other, GpbClass) or other.ctx is not self.ctx:
            raise ShapeError("context mismatch")

    def __add__(self, other):
        self._check(other)
        return GpbClass(self.ctx, self.base + other.base, self.hpart + other.hpart)

    def __sub__(self, other):
        self._check(other)
        return GpbClass(self.ctx, self.base - other.base, self.hpart - other.hpart)

    def __neg__(self):
        return GpbClass(self.ctx, -self.base, -self.hpart)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return gpb_mul(self, other)

    __rmul__ = __mul__

    def scale(self, r):
        return GpbClass(self.ctx, self.base.scale(r), self.hpart.scale(r))

    def is_zero(self):
        return self.base.is_zero() and self.hpart.is_zero()

    def degrees(self):
        """Exterior-degree support on P: base degree k counts as k, H-part
        degree k as k + 2 (H has codimension 1)."""
        degs = set(self.base.degrees())
        degs.update(k + 2 for k in self.hpart.degrees())
        return sorted(degs)

    def degree_part(self, k):
        return GpbClass(
            self.ctx,
            JacClass(self.ctx.jac, self.base.value.degree_part(k)),
            JacClass(self.ctx.jac, self.hpart.value.degree_part(k - 2)) if k >= 2 else self.ctx.jac.zero(),
        )

    def __eq__(self, other):
        return (
            isinstance(other, GpbClass)
            and other.ctx is self.ctx
            and other.base == self.base
            and other.hpart == self.hpart
        )

    def __hash__(self):
        return hash((id(self.ctx), self.base, self.hpart))

    def __repr__(self):
        return f"GpbClass(base={self.base!r}, hpart={self.hpart!r})"


class GpbProductClass:
    """c00 + H1.c10 + H2.c01 + H1.H2.c11 on P x P, each c a ProductClass."""

    __slots__ = ("ctx", "c00", "c10", "c01", "c11")

    def __init__(self, ctx, c00, c10, c01, c11):
        self.ctx = ctx
        self.c00, self.c10, self.c01, self.c11 = c00, c10, c01, c11

    def _check(self, other):
        if not isinstance(other, GpbProductClass) or other.ctx is not self.ctx:
            raise ShapeError("context mismatch")

    def components(self):
        return (self.c00, self.c10, self.c01, self.c11)

    def __add__(self, other):
        self._check(other)
        return GpbProductClass(
            self.ctx, *(a + b for a, b in zip(self.components(), other.components()))
        )

    def __sub__(self, other):
        self._check(other)
        return GpbProductClass(
            self.ctx, *(a - b for a, b in zip(self.components(), other.components()))
        )

    def __neg__(self):
        return GpbProductClass(self.ctx, *(-a for a in self.components()))

    def scale(self, r):
        return GpbProductClass(self.ctx, *(a.scale(r) for a in self.components()))

    def is_zero(self):
        return all(a.is_zero() for a in self.components())

    def __eq__(self, other):
        return (
            isinstance(other, GpbProductClass)
            and other.ctx is self.ctx
            and self.components() == other.components()
        )

    def __repr__(self):
        return f"GpbProductClass({self.c00!r}, {self.c10!r}, {self.c01!r}, {self.c11!r})"


# -- distinguished classes and the projection --------------------------------


def h_class(ctx):
    """H = c1(O_P(1))."""
    return GpbClass(ctx, ctx.jac.zero(), ctx.jac.one())


def sy_class(ctx):
    """Section S_y = H + pi^*section_shift."""
    return GpbClass(ctx, ctx.section_shift, ctx.jac.one())


def sz_class(ctx):
    """Section S_z; its shift is complementary (section_shift - twist_a) so
    that S_y . S_z = 0 under the bundle relation."""
    return GpbClass(ctx, ctx.section_shift - ctx.twist_a, ctx.jac.one())


def pi_pullback(ctx, x):
    return GpbClass(ctx, x, ctx.jac.zero())


def pi_pushforward(xi):
    """Fiber integration along P -> J: int_{P1} H = 1, int_{P1} 1 = 0."""
    return xi.hpart


def gpb_mul(xi, eta):
    """Intersection product from the projective bundle relation:
    (b, h).(b', h') = (b.b', b.h' + h.b' + twist_a.h.h')."""
    xi._check(eta)
    a = xi.ctx.twist_a
    return GpbClass(
        xi.ctx,
        xi.base * eta.base,
        xi.base * eta.hpart + xi.hpart * eta.base + a * xi.hpart * eta.hpart,
    )


def wtilde(ctx, d):
    """Extended Brill-Noether class of codimension d + 1:
    pi^*W_{g-d}.S_y + pi^*W_{g-d-1}, with W_{-1} = 0 at d = g."""
    g = ctx.genus
    if not 0 <= d <= g:
        raise ShapeError(f"wtilde index {d} outside [0, {g}]")
    first = gpb_mul(pi_pullback(ctx, w_class(ctx.jac, g - d)), sy_class(ctx))
    return first + pi_pullback(ctx, w_class(ctx.jac, g - d - 1))


# -- extended multiplication operators ---------------------------------------


def ext_mult_pullback(n, xi, preset=GEOMETRIC):
    """n^* on P.  GEOMETRIC: H-part picks up one factor n (the fibrewise map
    a -> a^n pulls the zero divisor back with multiplicity n).  PAPER: factor
    n^2, as forced by the stated eigendecomposition of A^k(P)."""
    _check_preset(preset)
    jb = mult_pullback(n, xi.base)
    jh = mult_pullback(n, xi.hpart)
    factor = Fraction(n) if preset == GEOMETRIC else Fraction(n) ** 2
    return GpbClass(xi.ctx, jb, jh.scale(factor))


def ext_mult_pushforward(n, xi, preset=GEOMETRIC):
    """n_* on P.  GEOMETRIC: base picks up the fibre degree n.  PAPER: the
    eigendecomposition forces 1/n^2 on the H-part (undefined at n = 0)."""
    _check_preset(preset)
    jb = mult_pushforward(n, xi.base)
    jh = mult_pushforward(n, xi.hpart)
    if preset == GEOMETRIC:
        return GpbClass(xi.ctx, jb.scale(n), jh)
    if n == 0:
        raise ShapeError("PAPER-preset pushforward undefined at n = 0")
    return GpbClass(xi.ctx, jb, jh.scale(Fraction(1, n * n)))


def ext_involution(xi, preset=GEOMETRIC):
    return ext_mult_pullback(-1, xi, preset)


# -- the resolved multiplication at divisor level ----------------------------


def fm_pullpush(xi):
    """f_* m~^* on divisors: the only level the extended Poincare class needs.

    Rules: S_y maps to p^*S_y + q^*S_y (both sections of the blown-up product
    dominate S_y); pi^*D maps to (pi x pi)^* m^*D; extended linearly.  Any
    class of codimension above 1 is rejected.
    """
    ctx = xi.ctx
    if any(k > 2 for k in xi.base.degrees()) or any(k > 0 for k in xi.hpart.degrees()):
        raise UnsupportedClassError(
            "f_* m~^* is implemented at divisor level only (codim <= 1)"
        )
    c = xi.hpart.value.coefficient(0)
    # xi = c.S_y + pi^*(base - c.section_shift)
    residue = xi.base - ctx.section_shift.scale(c)
    jz = ctx.jac.product_zero()
    out = GpbProductClass(ctx, pullback("sum", residue), jz, jz, jz)
    if c != 0:
        psy = _p_star(sy_class(ctx))
        qsy = _q_star(sy_class(ctx))
        out = out + (psy + qsy).scale(c)
    return out


def _p_star(xi):
    """Pullback along the first projection P x P -> P."""
    ctx = xi.ctx
    jz = ctx.jac.product_zero()
    return GpbProductClass(ctx, pullback("first", xi.base), pullback("first", xi.hpart), jz, jz)


def _q_star(xi):
    ctx = xi.ctx
    jz = ctx.jac.product_zero()
    return GpbProductClass(ctx, pullback("second", xi.base), jz, pullback("second", xi.hpart), jz)


def pp_mul(u, v):
    """Intersection product on P x P with H_i^2 = a_i . H_i, where a_i is the
    i-th factor pullback of the twist."""
    u._check(v)
    ctx = u.ctx
    a1 = pullback("first", ctx.twist_a)
    a2 = pullback("second", ctx.twist_a)
    x00, x10, x01, x11 = u.components()
    y00, y10, y01, y11 = v.components()
    c00 = x00 * y00
    c10 = x00 * y10 + x10 * y00 + a1 * x10 * y10
    c01 = x00 * y01 + x01 * y00 + a2 * x01 * y01
    c11 = (
        x00 * y11
        + x11 * y00
        + x10 * y01
        + x01 * y10
        + a1 * (x10 * y11 + x11 * y10)
        + a2 * (x01 * y11 + x11 * y01)
        + a1 * a2 * x11 * y11
    )
    return GpbProductClass(ctx, c00, c10, c01, c11)


def pp_exp(u):
    """Exponential of a nilpotent class on P x P (no scalar part)."""
    if u.c00.value.coefficient(0) != 0:
        raise ShapeError("exp only defined for classes without scalar part")
    out = _pp_one(u.ctx)
    power = out
    k = 0
    while True:
        k += 1
        power = pp_mul(power, u)
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, math.factorial(k)))


def _pp_one(ctx):
    jz = ctx.jac.product_zero()
    return GpbProductClass(ctx, ctx.jac.product_one(), jz, jz, jz)


# -- extended Poincare class and Fourier transform ---------------------------


def ext_poincare_kernel(ctx):
    """p^*Wt_g + q^*Wt_g - f_* m~^* Wt_g on P x P."""
    wt = wtilde(ctx, 0)
    return _p_star(wt) + _q_star(wt) - fm_pullpush(wt)


def exp_ext_poincare_kernel(ctx):
    if ctx._exp_ell_tilde is None:
        ctx._exp_ell_tilde = pp_exp(ext_poincare_kernel(ctx))
    return ctx._exp_ell_tilde


def pp_pushforward_second(u):
    """q_* from P x P to the second P factor: integrate H1 along the first P1
    fibre, then the first Jacobian factor."""
    ctx = u.ctx
    # int over first P1: 1 -> 0, H1 -> 1; with H1^2 = a1 H1 the H1-coefficient
    # classes c10, c11 are exactly what survives.
    return GpbClass(ctx, pushforward("second", u.c10), pushforward("second", u.c11))


def ext_fourier(xi):
    """Extended Fourier transform, evaluated literally from the kernel:
    q_*(p^*xi . exp(ell~))."""
    kernel = exp_ext_poincare_kernel(xi.ctx)
    return pp_pushforward_second(pp_mul(_p_star(xi), kernel))


# -- extended Pontryagin product ---------------------------------------------


def ext_pontryagin(xi, eta, preset=GEOMETRIC):
    """Pontryagin product on P via the resolved multiplication.

    GEOMETRIC: pushing cycles through the blow-up, only the section-times-
    section piece survives with zero-dimensional fibres, so
    (H.x)*(H.y) = H.pi^*(x*y) and everything else dies.
    PAPER: componentwise compatibility rules,
    (pi^*x)*(pi^*y) = (pi^*x)*(H.y) = pi^*(x*y) and (H.x)*(H.y) = H.pi^*(x*y).
    """
    xi._check(eta)
    _check_preset(preset)
    ctx = xi.ctx
    hh = pontryagin(xi.hpart, eta.hpart)
    if preset == GEOMETRIC:
        return GpbClass(ctx, ctx.jac.zero(), hh)
    bb = (
        pontryagin(xi.base, eta.base)
        + pontryagin(xi.base, eta.hpart)
        + pontryagin(xi.hpart, eta.base)
    )
    return GpbClass(ctx, bb, hh)


def ext_fourier_base_formula(xi):
    """Closed form under the default model: F~(pi^*b + H.pi^*h) = pi^*(F h).
    Tested consequence of the literal kernel evaluation, not the definition.
    """
    return pi_pullback(xi.ctx, fourier(xi.hpart))
