"""Calculus on the cohomology model of a genus-g Jacobian.

Generators are ordered e1, f1, ..., eg, fg (e_i at index 2i, f_i at 2i+1);
theta is the standard symplectic form sum e_i ^ f_i, so the top integral of
theta^g is g!.  Classes on the self-product live on 4g generators, first copy
before second copy.

Codimension-p algebraic classes sit in exterior degree 2p.  In this model the
multiplication operator n^* acts on exterior degree k as n^k, so each exterior
degree is one eigencomponent of the second grading (weight-s components with
s != 0 vanish identically here).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ShapeError
from .exterior import (
    ExtClass,
    box,
    exp_nilpotent,
    fiber_integrate_first,
    induced_map,
    integrate_top,
    wedge,
    wedge_power,
)
from .rational import RatMatrix, rref, solve_vandermonde


class JacContext:
    """Fixed-genus ambient: the exterior algebra on 2g generators."""

    def __init__(self, genus):
        if genus < 1:
            raise ShapeError("genus must be >= 1")
        self.genus = genus
        self.n = 2 * genus
        theta = ExtClass.zero(self.n)
        for i in range(genus):
            theta = theta + ExtClass(self.n, {0b11 << (2 * i): Fraction(1)})
        self.theta = JacClass(self, theta)
        self._exp_ell = None

    def zero(self):
        return JacClass(self, ExtClass.zero(self.n))

    def one(self):
        return JacClass(self, ExtClass.one(self.n))

    def product_zero(self):
        return ProductClass(self, ExtClass.zero(2 * self.n))

    def product_one(self):
        return ProductClass(self, ExtClass.one(2 * self.n))

    def __repr__(self):
        return f"JacContext(genus={self.genus})"


class _CtxClass:
    """Common wrapper: an ExtClass tied to a JacContext."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    def _check(self, other):
        if type(other) is not type(self) or other.ctx is not self.ctx:
            raise ShapeError("context mismatch")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.ctx, self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.ctx, self.value - other.value)

    def __neg__(self):
        return type(self)(self.ctx, -self.value)

    def __mul__(self, other):
        """Intersection (wedge) product; also accepts rational scalars."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return type(self)(self.ctx, wedge(self.value, other.value))

    __rmul__ = __mul__

    def scale(self, r):
        return type(self)(self.ctx, self.value.scale(r))

    def is_zero(self):
        return self.value.is_zero()

    def degrees(self):
        return self.value.degrees()

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.ctx is self.ctx
            and other.value == self.value
        )

    def __hash__(self):
        return hash((id(self.ctx), self.value))

    def __repr__(self):
        return f"{type(self).__name__}({self.value!r})"


class JacClass(_CtxClass):
    """Class on the Jacobian: ExtClass on 2g generators."""

    def __init__(self, ctx, value):
        if value.n != ctx.n:
            raise ShapeError("JacClass needs 2g generators")
        super().__init__(ctx, value)


class ProductClass(_CtxClass):
    """Class on Jac x Jac: ExtClass on 4g generators, first copy first."""

    def __init__(self, ctx, value):
        if value.n != 2 * ctx.n:
            raise ShapeError("ProductClass needs 4g generators")
        super().__init__(ctx, value)


# -- distinguished classes ---------------------------------------------------


def w_class(ctx, i):
    """Brill-Noether class: theta^(g-i) / (g-i)!; i = -1 gives 0 (boundary
    convention used by the extended decomposition)."""
    g = ctx.genus
    if i == -1:
        return ctx.zero()
    if not 0 <= i <= g:
        raise ShapeError(f"w_class index {i} outside [-1, {g}]")
    k = g - i
    return JacClass(ctx, wedge_power(ctx.theta.value, k).scale(Fraction(1, math.factorial(k))))


def point_class(ctx):
    return w_class(ctx, 0)


# -- the four structure maps on J x J ----------------------------------------


def _gen(ctx, i):
    return ExtClass.generator(2 * ctx.n, i)


def pullback(tag, x):
    """Pullback to J x J along first / second projection or the addition map."""
    ctx = x.ctx
    n = ctx.n
    if tag == "first":
        images = [_gen(ctx, i) for i in range(n)]
    elif tag == "second":
        images = [_gen(ctx, i + n) for i in range(n)]
    elif tag == "sum":
        images = [_gen(ctx, i) + _gen(ctx, i + n) for i in range(n)]
    else:
        raise ShapeError(f"unknown pullback tag {tag!r}")
    return ProductClass(ctx, induced_map(images, x.value))


def external_product(x, y):
    """p^*x . q^*y computed directly on the bitmask model."""
    x._check(y)
    return ProductClass(x.ctx, box(x.value, y.value))


def _fiber_integrate_second(ctx, value):
    """Integrate the second 2g-block; no sign since 2g is even."""
    n = ctx.n
    full_second = ((1 << n) - 1) << n
    out = {}
    for m, c in value.terms.items():
        if m & full_second == full_second:
            out[m & ((1 << n) - 1)] = c
    return ExtClass(n, out)


def pushforward(tag, z):
    """Pushforward from J x J along a projection or the addition map.

    The addition map factors as first-projection after the shear
    (u, v) -> (u + v, v); its pushforward is the inverse shear's pullback
    followed by integration of the second factor.
    """
    ctx = z.ctx
    n = ctx.n
    if tag == "second":
        return JacClass(ctx, fiber_integrate_first(z.value, n))
    if tag == "first":
        return JacClass(ctx, _fiber_integrate_second(ctx, z.value))
    if tag == "sum":
        # inverse shear (u, v) -> (u - v, v) on degree-1 generators
        images = [_gen(ctx, i) - _gen(ctx, i + n) for i in range(n)]
        images += [_gen(ctx, i + n) for i in range(n)]
        sheared = induced_map(images, z.value)
        return JacClass(ctx, _fiber_integrate_second(ctx, sheared))
    raise ShapeError(f"unknown pushforward tag {tag!r}")


# -- Poincare kernel, Fourier, Pontryagin ------------------------------------


def poincare_kernel(ctx):
    """The divisor class p^*theta + q^*theta - m^*theta on J x J."""
    th = ctx.theta
    return pullback("first", th) + pullback("second", th) - pullback("sum", th)


def exp_poincare_kernel(ctx):
    if ctx._exp_ell is None:
        ctx._exp_ell = ProductClass(ctx, exp_nilpotent(poincare_kernel(ctx).value))
    return ctx._exp_ell


def fourier(x):
    """Fourier transform: push the first-factor pullback times exp(ell) down
    the second projection."""
    kernel = exp_poincare_kernel(x.ctx)
    return pushforward("second", pullback("first", x) * kernel)


def pontryagin(x, y):
    """Convolution product under the group law; homogeneous of degree -g."""
    x._check(y)
    return pushforward("sum", external_product(x, y))


# -- multiplication operators and the second grading -------------------------


def mult_pullback(n, x):
    """Pullback along multiplication by n: scales exterior degree k by n^k."""
    out = {}
    for m, c in x.value.terms.items():
        k = m.bit_count()
        s = c * Fraction(n) ** k
        if s != 0:
            out[m] = s
    return JacClass(x.ctx, ExtClass(x.ctx.n, out))


def involution(x):
    return mult_pullback(-1, x)


def pair(x, y):
    """Poincare pairing: top integral of the intersection."""
    x._check(y)
    return integrate_top(wedge(x.value, y.value))


def mult_pushforward(n, x):
    """Adjoint of mult_pullback under the Poincare pairing, found degree by
    degree by exact linear solving: pair(n_* x, y) = pair(x, n^* y) for all y.
    """
    ctx = x.ctx
    N = ctx.n
    result = ctx.zero()
    for k in x.value.degrees():
        xk = JacClass(ctx, x.value.degree_part(k))
        kmasks = [m for m in range(1 << N) if m.bit_count() == k]
        lmasks = [m for m in range(1 << N) if m.bit_count() == N - k]
        # unknown z = sum_j z_j basis(kmasks[j]); one equation per test class y
        aug = []
        for lm in lmasks:
            y = JacClass(ctx, ExtClass(N, {lm: Fraction(1)}))
            row = [pair(JacClass(ctx, ExtClass(N, {km: Fraction(1)})), y) for km in kmasks]
            row.append(pair(xk, mult_pullback(n, y)))
            aug.append(row)
        reduced, rank, pivots = rref(RatMatrix.from_rows(aug, len(kmasks) + 1))
        if rank != len(kmasks) or pivots != list(range(len(kmasks))):
            raise ShapeError("Poincare pairing unexpectedly degenerate")
        rows = reduced.to_rows()
        sol = {kmasks[j]: rows[j][-1] for j in range(len(kmasks))}
        result = result + JacClass(ctx, ExtClass(N, sol))
    return result


def beauville_decompose(x):
    """Split x into eigencomponents of the multiplication operators, by exact
    Vandermonde solving over sampled n in {2, 3, ...}.

    Returns a list of (codim, eigen-exponent, component); in this model the
    eigen-exponent of a component of exterior degree k is k (codim k/2).
    """
    degs = x.value.degrees()
    if not degs:
        return []
    masks = sorted(x.value.terms)
    samples = list(range(2, 2 + len(degs)))
    values = []
    for nn in samples:
        pb = mult_pullback(nn, x)
        values.append([pb.value.coefficient(m) for m in masks])
    comps = solve_vandermonde(samples, degs, values)
    out = []
    for k, comp in zip(degs, comps):
        cls = JacClass(x.ctx, ExtClass(x.ctx.n, dict(zip(masks, comp))))
        out.append((Fraction(k, 2), k, cls))
    return out
