"""Graded-anticommutative algebra on N degree-1 generators over exact rationals.

Terms are stored as a dict mapping a generator bitmask (bit i set = generator i
present, canonical order = increasing index) to a nonzero Fraction.  Koszul
signs come from transposition counting against that single global order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InvalidMapError, ShapeError


def _merge_sign(a, b):
    """Sign of sorting the concatenation (sorted a, sorted b) of disjoint masks."""
    sign = 1
    bb = b
    while bb:
        low = bb & -bb
        # generators of a with index above this bit each contribute a swap
        if (a >> low.bit_length()).bit_count() & 1:
            sign = -sign
        bb ^= low
    return sign


class ExtClass:
    """Element of the exterior algebra on `n` generators.

    Immutable by convention: no method mutates `terms` after construction.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            full = (1 << n) - 1
            for mask, coeff in terms.items():
                if mask & ~full:
                    raise ShapeError(f"mask {mask:#x} outside {n} generators")
                c = Fraction(coeff)
                if c != 0:
                    clean[mask] = clean.get(mask, Fraction(0)) + c
                    if clean[mask] == 0:
                        del clean[mask]
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {0: Fraction(1)})

    @classmethod
    def generator(cls, n, i):
        if not 0 <= i < n:
            raise ShapeError(f"generator {i} out of range for n={n}")
        return cls(n, {1 << i: Fraction(1)})

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({m.bit_count() for m in self.terms})

    def is_homogeneous(self, degree=None):
        degs = self.degrees()
        if degree is None:
            return len(degs) <= 1
        return degs == [] or degs == [degree]

    def degree_part(self, k):
        return ExtClass(
            self.n, {m: c for m, c in self.terms.items() if m.bit_count() == k}
        )

    def coefficient(self, mask):
        return self.terms.get(mask, Fraction(0))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return ExtClass(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExtClass(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, r):
        r = Fraction(r)
        if r == 0:
            return ExtClass.zero(self.n)
        return ExtClass(self.n, {m: r * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, ExtClass)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"ExtClass(n={self.n}, {len(self.terms)} terms)"

    def _check(self, other):
        if not isinstance(other, ExtClass) or other.n != self.n:
            raise ShapeError("generator_count mismatch")


def wedge(a, b):
    """Exterior (cup) product; bilinear, associative, graded-anticommutative."""
    a._check(b)
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            c = ca * cb * _merge_sign(ma, mb)
            m = ma | mb
            s = out.get(m, Fraction(0)) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
    return ExtClass(a.n, out)


def wedge_power(a, k):
    out = ExtClass.one(a.n)
    for _ in range(k):
        out = wedge(out, a)
    return out


def induced_map(images, a):
    """The algebra homomorphism extending generator i -> images[i], applied to a.

    Every image must be a pure degree-1 class; they may live in a different
    (target) algebra, all of one generator count.
    """
    if len(images) != a.n:
        raise ShapeError("need one image per generator")
    target_n = images[0].n if images else a.n
    for img in images:
        if img.n != target_n:
            raise ShapeError("images in mismatched target algebras")
        if not img.is_homogeneous(1):
            raise InvalidMapError("image is not pure degree 1")
    out = ExtClass.zero(target_n)
    for mask, coeff in a.terms.items():
        term = ExtClass.one(target_n).scale(coeff)
        mm = mask
        while mm and not term.is_zero():
            i = (mm & -mm).bit_length() - 1
            term = wedge(term, images[i])
            mm &= mm - 1
        out = out + term
    return out


def integrate_top(a):
    """Coefficient of the full generator subset in canonical order; the
    orientation convention of the whole package."""
    return a.coefficient((1 << a.n) - 1)


def box(a, b):
    """External product: result lives on the direct sum, first-factor
    generators preceding second-factor generators."""
    n = a.n + b.n
    out = {}
    # Masks concatenate in increasing index order, so no extra sign appears.
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = ma | (mb << a.n)
            s = out.get(m, Fraction(0)) + ca * cb
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
    return ExtClass(n, out)


def fiber_integrate_first(z, first_n):
    """Pushforward along the projection forgetting the first factor of a
    direct sum whose first summand has `first_n` generators.

    Keeps only terms containing the full first-factor subset and strips it;
    no sign because first-factor generators already sit at the front of the
    canonical order.
    """
    full_first = (1 << first_n) - 1
    out = {}
    for m, c in z.terms.items():
        if m & full_first == full_first:
            out[m >> first_n] = c
    return ExtClass(z.n - first_n, out)


def exp_nilpotent(a):
    """Exponential sum 1 + a + a^2/2! + ...; terminates because a has no
    degree-0 part in any use here (nilpotent in a finite exterior algebra)."""
    if a.coefficient(0) != 0:
        raise ShapeError("exp only defined for classes without scalar part")
    out = ExtClass.one(a.n)
    power = ExtClass.one(a.n)
    k = 0
    while True:
        k += 1
        power = wedge(power, a)
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, math.factorial(k)))
