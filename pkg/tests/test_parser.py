"""Expression DSL: lexer, grammar, printer round-trip, sorts, evaluation."""

from fractions import Fraction

import pytest

from jacring import gpb as G
from jacring import jacobian as J
from jacring.parser import (
    EvalContext,
    ExprSyntaxError,
    SortError,
    eval_expr,
    format_value,
    parse_expr,
    print_expr,
    sort_of,
)

# corpus of >= 30 well-formed expressions covering every construct
CORPUS = [
    "theta",
    "pt",
    "one",
    "H",
    "Sy",
    "Sz",
    "W[0]",
    "W[1]",
    "W[-1]",
    "Wt[0]",
    "Wt[1]",
    "2",
    "3/4",
    "-theta",
    "- -theta",
    "theta + pt",
    "theta - pt",
    "theta * theta",
    "2 * theta",
    "theta * 1/2",
    "(theta + pt) * theta",
    "theta * (theta + pt)",
    "theta + pt * 2",
    "-(theta + pt)",
    "F(theta)",
    "F(F(theta))",
    "Fx(H)",
    "inv(theta)",
    "inv(Sy)",
    "nstar(2, theta)",
    "nstar(-1, H)",
    "nlow(3, theta)",
    "pi*(theta)",
    "pipush(H * pi*(theta))",
    "pont(theta, pt)",
    "pontx(H, H)",
    "integrate(theta * theta)",
    "pair(W[1], W[1])",
    "beauville(theta + pt)",
    "F(theta) * F(pt) + nstar(2, theta - pt)",
    "Fx(H + pi*(theta)) - Sy * Sz",
]


@pytest.mark.parametrize("src", CORPUS)
def test_print_roundtrip(src):
    ast = parse_expr(src)
    printed = print_expr(ast)
    assert parse_expr(printed) == ast
    # printing is a fixed point
    assert print_expr(parse_expr(printed)) == printed


@pytest.mark.parametrize("src", CORPUS)
def test_corpus_evaluates(src):
    ctx = EvalContext(2)
    value = eval_expr(parse_expr(src), ctx)
    assert format_value(value)  # printable, deterministic entry point


def test_precedence():
    assert parse_expr("theta + pt * 2") == parse_expr("theta + (pt * 2)")
    assert parse_expr("theta - pt - pt") == parse_expr("(theta - pt) - pt")
    assert parse_expr("-theta * pt") == parse_expr("(-theta) * pt")


def test_eval_matches_library():
    ctx = EvalContext(2)
    jc = ctx.jac

    def ev(src):
        return eval_expr(parse_expr(src), ctx)

    assert ev("theta") == jc.theta
    assert ev("W[1]") == J.w_class(jc, 1)
    assert ev("F(theta)") == J.fourier(jc.theta)
    assert ev("pont(theta, pt)") == J.pontryagin(jc.theta, J.point_class(jc))
    assert ev("nstar(2, theta)") == J.mult_pullback(2, jc.theta)
    assert ev("nlow(3, theta)") == J.mult_pushforward(3, jc.theta)
    assert ev("pair(W[1], W[1])") == Fraction(2)
    assert ev("integrate(theta * theta)") == Fraction(2)
    assert ev("H") == G.h_class(ctx.gpb)
    assert ev("Wt[0]") == G.wtilde(ctx.gpb, 0)
    assert ev("pi*(theta)") == G.pi_pullback(ctx.gpb, jc.theta)
    assert ev("pipush(H)") == G.pi_pushforward(G.h_class(ctx.gpb))
    assert ev("Fx(H)") == G.ext_fourier(G.h_class(ctx.gpb))
    assert ev("pontx(H, H)") == G.ext_pontryagin(
        G.h_class(ctx.gpb), G.h_class(ctx.gpb), ctx.preset
    )
    assert ev("2 * theta - theta") == jc.theta


def test_scalar_coercion():
    ctx = EvalContext(2)
    assert eval_expr(parse_expr("theta + 1"), ctx) == ctx.jac.theta + ctx.jac.one()
    assert eval_expr(parse_expr("1 - H"), ctx) == ctx.gpb.one() - G.h_class(ctx.gpb)


def test_preset_threaded_through_eval():
    geometric = EvalContext(2, G.GEOMETRIC)
    paper = EvalContext(2, G.PAPER)
    src = "pontx(pi*(theta), pi*(theta))"
    assert eval_expr(parse_expr(src), geometric).is_zero()
    assert not eval_expr(parse_expr(src), paper).is_zero()


@pytest.mark.parametrize(
    "src",
    [
        "theta + H",
        "pair(H, H)",
        "F(H)",
        "Fx(theta)",
        "pi*(H)",
        "pipush(theta)",
        "integrate(2)",
        "beauville(theta) + pt",
        "nstar(1/2, theta)",
        "inv(2)",
    ],
)
def test_sort_errors(src):
    with pytest.raises(SortError):
        eval_expr(parse_expr(src), EvalContext(2))


@pytest.mark.parametrize(
    "src, pos",
    [
        ("theta +", 7),
        ("(theta", 6),
        ("W[", 2),
        ("frob(theta)", 0),
        ("theta theta", 6),
        ("@", 0),
        ("F(theta, pt)", 0),
        ("1/x", 2),
    ],
)
def test_syntax_error_positions(src, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr(src)
    assert exc.value.position == pos


def test_sort_of_results():
    assert sort_of(parse_expr("theta * pt")) == "J"
    assert sort_of(parse_expr("H * Sy")) == "P"
    assert sort_of(parse_expr("pair(theta, pt)")) == "scalar"
    assert sort_of(parse_expr("pi*(theta)")) == "P"
    assert sort_of(parse_expr("pipush(H)")) == "J"
