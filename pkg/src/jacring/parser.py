"""Expression DSL: parsing, sort checking, printing and evaluation.

Grammar ('*' is the intersection product; Pontryagin is the named pont/pontx):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | atom
    atom    := rational | ident | call | '(' expr ')'
    rational:= INT ('/' INT)?
    ident   := theta | pt | one | H | Sy | Sz | W '[' INT ']' | Wt '[' INT ']'
    call    := name '(' expr (',' expr)* ')'

Names: F, Fx, inv, nstar, nlow, pi*, pipush, pont, pontx, integrate, pair,
beauville.  Sorts (J-classes, P-classes, scalars) are checked before
evaluation; mixed-sort operands are rejected with the offending position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import gpb as G
from . import jacobian as J
from .render import format_gpb, format_jac, format_rat

SCALAR = "scalar"
JSORT = "J"
PSORT = "P"


class ExprSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SortError(ValueError):
    pass


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Ident:
    name: str
    index: int = None


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


# -- lexer -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>pi\*|[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[()\[\],+\-*/]))"
)

FUNCTIONS = {
    "F": 1,
    "Fx": 1,
    "inv": 1,
    "nstar": 2,
    "nlow": 2,
    "pi*": 1,
    "pipush": 1,
    "pont": 2,
    "pontx": 2,
    "integrate": 1,
    "pair": 2,
    "beauville": 1,
}

IDENT_SORTS = {
    "theta": JSORT,
    "pt": JSORT,
    "one": JSORT,
    "W": JSORT,
    "H": PSORT,
    "Sy": PSORT,
    "Sz": PSORT,
    "Wt": PSORT,
}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", at)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise ExprSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", pos)
        return e

    def expr(self):
        e = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.factor()
        while self.peek()[1] == "*":
            self.next()
            e = BinOp("*", e, self.factor())
        return e

    def factor(self):
        if self.peek()[1] == "-":
            self.next()
            return Neg(self.factor())
        return self.atom()

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            num = int(val)
            if self.peek()[1] == "/":
                self.next()
                k2, v2, p2 = self.next()
                if k2 != "int":
                    raise ExprSyntaxError("expected integer denominator", p2)
                return Lit(Fraction(num, int(v2)))
            return Lit(Fraction(num))
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                if len(args) != FUNCTIONS[val]:
                    raise ExprSyntaxError(
                        f"{val} takes {FUNCTIONS[val]} argument(s), got {len(args)}", pos
                    )
                return Call(val, tuple(args))
            if val in ("W", "Wt"):
                self.expect("[")
                k2, v2, p2 = self.next()
                neg = False
                if v2 == "-":
                    neg = True
                    k2, v2, p2 = self.next()
                if k2 != "int":
                    raise ExprSyntaxError("expected integer index", p2)
                self.expect("]")
                return Ident(val, -int(v2) if neg else int(v2))
            if val in IDENT_SORTS:
                return Ident(val)
            raise ExprSyntaxError(f"unknown identifier {val!r}", pos)
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text):
    return _Parser(text).parse()


# -- printer -----------------------------------------------------------------


def print_expr(e, parent_prec=0):
    """Deterministic printer; parse(print(parse(s))) == parse(s)."""
    if isinstance(e, Lit):
        return format_rat(e.value)
    if isinstance(e, Ident):
        return e.name if e.index is None else f"{e.name}[{e.index}]"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(print_expr(a) for a in e.args)})"
    if isinstance(e, Neg):
        inner = print_expr(e.arg, 3)
        out = f"-{inner}"
        return f"({out})" if parent_prec >= 2 else out
    if isinstance(e, BinOp):
        prec = 1 if e.op in "+-" else 2
        left = print_expr(e.left, prec - 1)
        right = print_expr(e.right, prec)
        out = f"{left} {e.op} {right}"
        return f"({out})" if parent_prec >= prec else out
    raise TypeError(f"not an expression node: {e!r}")


# -- sort checking -----------------------------------------------------------

_FUNC_SORTS = {
    # name: (argument sorts or None for class-polymorphic, result or None=same)
    "F": ((JSORT,), JSORT),
    "Fx": ((PSORT,), PSORT),
    "inv": ((None,), None),
    "nstar": ((SCALAR, None), None),
    "nlow": ((SCALAR, None), None),
    "pi*": ((JSORT,), PSORT),
    "pipush": ((PSORT,), JSORT),
    "pont": ((JSORT, JSORT), JSORT),
    "pontx": ((PSORT, PSORT), PSORT),
    "integrate": ((None,), SCALAR),
    "pair": ((JSORT, JSORT), SCALAR),
    "beauville": ((JSORT,), "decomposition"),
}


def sort_of(e):
    if isinstance(e, Lit):
        return SCALAR
    if isinstance(e, Ident):
        return IDENT_SORTS[e.name]
    if isinstance(e, Neg):
        return sort_of(e.arg)
    if isinstance(e, BinOp):
        ls, rs = sort_of(e.left), sort_of(e.right)
        for s in (ls, rs):
            if s == "decomposition":
                raise SortError("decompositions cannot be combined further")
        if ls == rs:
            return ls
        if SCALAR in (ls, rs):
            return ls if rs == SCALAR else rs
        raise SortError(f"cannot combine a {ls}-class and a {rs}-class with {e.op!r}")
    if isinstance(e, Call):
        arg_sorts, result = _FUNC_SORTS[e.name]
        poly = None
        for spec, arg in zip(arg_sorts, e.args):
            got = sort_of(arg)
            if spec is None:
                if got == SCALAR or got == "decomposition":
                    raise SortError(f"{e.name} needs a class argument, got {got}")
                if poly is None:
                    poly = got
                elif poly != got:
                    raise SortError(f"{e.name} arguments live in different models")
            elif got != spec:
                raise SortError(f"{e.name} expects a {spec} argument, got {got}")
        if result is None:
            return poly
        return result
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation --------------------------------------------------------------


class EvalContext:
    """Fixed genus, preset and twist options for one evaluation run."""

    def __init__(self, genus, preset=G.GEOMETRIC, twist=None, shift=None):
        self.jac = J.JacContext(genus)
        self.gpb = G.GpbContext(self.jac, twist_a=twist, section_shift=shift)
        self.preset = preset


@dataclass(frozen=True)
class Decomposition:
    parts: tuple  # (codim Fraction, exponent int, JacClass)


def eval_expr(e, ctx):
    """Exact evaluation; returns a Fraction, JacClass, GpbClass or
    Decomposition according to the expression's sort."""
    sort_of(e)  # reject ill-sorted input before any work
    return _eval(e, ctx)


def _coerce(value, other, ctx):
    """Lift a scalar to a multiple of the unit of the other operand's model."""
    if isinstance(value, Fraction) and not isinstance(other, Fraction):
        if isinstance(other, J.JacClass):
            return ctx.jac.one().scale(value)
        return ctx.gpb.one().scale(value)
    return value


def _eval(e, ctx):
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Neg):
        return -_eval(e.arg, ctx)
    if isinstance(e, Ident):
        if e.name == "theta":
            return ctx.jac.theta
        if e.name == "pt":
            return J.point_class(ctx.jac)
        if e.name == "one":
            return ctx.jac.one()
        if e.name == "W":
            return J.w_class(ctx.jac, e.index)
        if e.name == "H":
            return G.h_class(ctx.gpb)
        if e.name == "Sy":
            return G.sy_class(ctx.gpb)
        if e.name == "Sz":
            return G.sz_class(ctx.gpb)
        if e.name == "Wt":
            return G.wtilde(ctx.gpb, e.index)
        raise SortError(f"unknown identifier {e.name!r}")
    if isinstance(e, BinOp):
        left = _eval(e.left, ctx)
        right = _eval(e.right, ctx)
        left = _coerce(left, right, ctx)
        right = _coerce(right, left, ctx)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if isinstance(left, Fraction) and not isinstance(right, Fraction):
            return right.scale(left)
        if isinstance(right, Fraction) and not isinstance(left, Fraction):
            return left.scale(right)
        if isinstance(left, G.GpbClass):
            return G.gpb_mul(left, right)
        return left * right
    if isinstance(e, Call):
        args = [_eval(a, ctx) for a in e.args]
        name = e.name
        if name == "F":
            return J.fourier(args[0])
        if name == "Fx":
            return G.ext_fourier(args[0])
        if name == "inv":
            if isinstance(args[0], G.GpbClass):
                return G.ext_involution(args[0], ctx.preset)
            return J.involution(args[0])
        if name in ("nstar", "nlow"):
            n = args[0]
            if n.denominator != 1:
                raise SortError(f"{name} needs an integer multiplier, got {format_rat(n)}")
            n = int(n)
            x = args[1]
            if name == "nstar":
                if isinstance(x, G.GpbClass):
                    return G.ext_mult_pullback(n, x, ctx.preset)
                return J.mult_pullback(n, x)
            if isinstance(x, G.GpbClass):
                return G.ext_mult_pushforward(n, x, ctx.preset)
            return J.mult_pushforward(n, x)
        if name == "pi*":
            return G.pi_pullback(ctx.gpb, args[0])
        if name == "pipush":
            return G.pi_pushforward(args[0])
        if name == "pont":
            return J.pontryagin(args[0], args[1])
        if name == "pontx":
            return G.ext_pontryagin(args[0], args[1], ctx.preset)
        if name == "integrate":
            if isinstance(args[0], G.GpbClass):
                # top integral over the (g+1)-fold: only H times the base top
                # class survives fibre integration
                return _integrate_jac(G.pi_pushforward(args[0]))
            return _integrate_jac(args[0])
        if name == "pair":
            return J.pair(args[0], args[1])
        if name == "beauville":
            return Decomposition(tuple(J.beauville_decompose(args[0])))
        raise SortError(f"unknown function {name!r}")
    raise TypeError(f"not an expression node: {e!r}")


def _integrate_jac(x):
    from .exterior import integrate_top

    return integrate_top(x.value)


def format_value(value):
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, J.JacClass):
        return format_jac(value)
    if isinstance(value, G.GpbClass):
        return format_gpb(value)
    if isinstance(value, Decomposition):
        lines = []
        for codim, exponent, comp in value.parts:
            lines.append(f"exponent {exponent} (codim {format_rat(codim)}): {format_jac(comp)}")
        return "\n".join(lines) if lines else "0 (no components)"
    raise TypeError(f"unprintable value {value!r}")
