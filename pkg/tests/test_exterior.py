"""Exterior algebra on bitmask monomials: signs, products, integration."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacring.errors import InvalidMapError
from jacring.exterior import (
    ExtClass,
    box,
    exp_nilpotent,
    fiber_integrate_first,
    induced_map,
    integrate_top,
    wedge,
    wedge_power,
)

N = 4

rats = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def random_class(draw_terms):
    return ExtClass(N, dict(draw_terms))


classes = st.dictionaries(
    st.integers(min_value=0, max_value=(1 << N) - 1), rats, max_size=5
).map(lambda d: ExtClass(N, d))


def gen(i, n=N):
    return ExtClass.generator(n, i)


def test_generator_squares_to_zero():
    for i in range(N):
        assert wedge(gen(i), gen(i)).is_zero()


def test_anticommutativity_of_generators():
    for i in range(N):
        for j in range(N):
            if i != j:
                assert wedge(gen(i), gen(j)) == -wedge(gen(j), gen(i))


def test_koszul_sign_three_fold():
    # (e0^e1) ^ e2 picks up no sign; e2 ^ (e0^e1) is even as well
    a = wedge(gen(0), gen(1))
    assert wedge(a, gen(2)) == wedge(gen(2), a)
    # moving a single generator past a single generator flips the sign
    assert wedge(gen(3), wedge(gen(1), gen(2))).coefficient(0b1110) == Fraction(1)


@settings(max_examples=50)
@given(classes, classes, classes)
def test_distributivity(a, b, c):
    assert wedge(a, b + c) == wedge(a, b) + wedge(a, c)


@settings(max_examples=50)
@given(classes, classes, classes)
def test_associativity(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_graded_commutativity_exhaustive():
    monos = [ExtClass(N, {m: Fraction(1)}) for m in range(1 << N)]
    for a in monos:
        for b in monos:
            (p,) = a.degrees() or {0}
            (q,) = b.degrees() or {0}
            sign = Fraction(-1) ** (p * q)
            assert wedge(a, b) == wedge(b, a).scale(sign)


def test_wedge_power_theta():
    theta = wedge(gen(0), gen(1)) + wedge(gen(2), gen(3))
    top = wedge_power(theta, 2)
    assert integrate_top(top) == factorial(2)
    assert wedge_power(theta, 3).is_zero()


def test_integrate_top_picks_full_mask():
    x = ExtClass(N, {(1 << N) - 1: Fraction(5, 3), 0b0011: Fraction(7)})
    assert integrate_top(x) == Fraction(5, 3)


def test_induced_map_functorial_on_products():
    images = [gen(1), gen(0), gen(3), gen(2)]  # swap pairs
    a = wedge(gen(0), gen(2))
    b = wedge(gen(1), gen(3))
    fa = induced_map(images, a)
    fb = induced_map(images, b)
    assert induced_map(images, wedge(a, b)) == wedge(fa, fb)


def test_induced_map_rejects_mixed_degree_images():
    bad = [gen(0) + wedge(gen(1), gen(2))] + [gen(i) for i in range(1, N)]
    with pytest.raises(InvalidMapError):
        induced_map(bad, gen(0))


def test_box_and_fiber_integration():
    a = wedge(gen(0), gen(1))
    b = ExtClass.one(N)
    z = box(a, b)
    assert z.n == 2 * N
    # integrating the first factor needs the full first block; a is not top
    assert fiber_integrate_first(z, N).is_zero()
    top = ExtClass(N, {(1 << N) - 1: Fraction(3)})
    assert fiber_integrate_first(box(top, a), N) == a.scale(3)


def test_box_bilinear():
    a, b, c = gen(0), gen(1), gen(2)
    assert box(a + b, c) == box(a, c) + box(b, c)


def test_exp_nilpotent():
    theta = wedge(gen(0), gen(1)) + wedge(gen(2), gen(3))
    e = exp_nilpotent(theta)
    expected = ExtClass.one(N) + theta + wedge_power(theta, 2).scale(Fraction(1, 2))
    assert e == expected


def test_degree_bookkeeping():
    x = gen(0) + wedge(gen(1), gen(2))
    assert x.degrees() == [1, 2]
    assert not x.is_homogeneous()
    assert x.degree_part(1) == gen(0)
    assert x.degree_part(3).is_zero()
