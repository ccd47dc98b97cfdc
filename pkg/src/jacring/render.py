"""Deterministic plain-text rendering of rationals and classes.

Classes print as signed monomial sums in e_i, f_i (and H), in graded then
lexicographic term order, so identical values always render identically.
"""

from __future__ import annotations

from fractions import Fraction


def format_rat(r):
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _generator_name(index, offset=0, prime=False):
    pair, kind = divmod(index - offset, 2)
    name = ("e" if kind == 0 else "f") + str(pair + 1)
    return name + "'" if prime else name


def _monomial(mask, n, primed_from=None):
    names = []
    i = 0
    m = mask
    while m:
        if m & 1:
            if primed_from is not None and i >= primed_from:
                names.append(_generator_name(i, offset=primed_from, prime=True))
            else:
                names.append(_generator_name(i))
        m >>= 1
        i += 1
    return "^".join(names)


def format_ext(cls, primed_from=None):
    """Render an ExtClass; primed_from marks where second-copy generators
    start (printed with a prime)."""
    if cls.is_zero():
        return "0"
    keys = sorted(cls.terms, key=lambda m: (m.bit_count(), m))
    parts = []
    for mask in keys:
        coeff = cls.terms[mask]
        mono = _monomial(mask, cls.n, primed_from)
        if mask == 0:
            body = format_rat(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{format_rat(abs(coeff))}*{mono}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_jac(x):
    return format_ext(x.value)


def format_product(z):
    return format_ext(z.value, primed_from=z.ctx.n)


def format_gpb(xi):
    """Render pi^*base + H*pi^*(hpart), H-part first to match the divisor
    shapes people expect (e.g. H + pi*(theta))."""
    pieces = []
    h = xi.hpart
    if not h.is_zero():
        if h.value.terms == {0: Fraction(1)}:
            pieces.append("H")
        elif h.value.terms == {0: Fraction(-1)}:
            pieces.append("-H")
        else:
            pieces.append(f"H*pi*({format_jac(h)})")
    if not xi.base.is_zero():
        if xi.base.value.degrees() == [0]:
            pieces.append(format_rat(xi.base.value.coefficient(0)))
        else:
            pieces.append(f"pi*({format_jac(xi.base)})")
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
