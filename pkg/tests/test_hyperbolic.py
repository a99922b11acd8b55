from fractions import Fraction

import pytest
from hypothesis import given, settings

from jspinor.hyperbolic import U, Hyperbolic, hyp_conj, hyp_join, hyp_mul, hyp_split
from jspinor.ring import X, UniPoly

from tests.strategies import hyperbolics


def h(a, b):
    return Hyperbolic(Fraction(a), Fraction(b))


def test_unit_squares_to_one():
    assert hyp_mul(U, U) == h(1, 0)


def test_zero_divisor_pair():
    assert hyp_mul(h(1, 1), h(1, -1)).is_zero()


def test_mul_expansion():
    # (1+8u)(1-u) = 1 - u + 8u - 8 = -7 + 7u
    assert hyp_mul(h(1, 8), h(1, -1)) == h(-7, 7)


@pytest.mark.parametrize("z,expected", [(h(0, 3), h(0, -3)), (h(-1, 1), h(-1, -1))])
def test_conj(z, expected):
    assert hyp_conj(z) == expected


def test_conj_involution():
    assert hyp_conj(hyp_conj(h(1, 8))) == h(1, 8)


def test_split():
    assert hyp_split(h(1, 8)) == (9, -7)
    assert hyp_split(U) == (1, -1)
    assert hyp_join(*hyp_split(h(-2, 4))) == h(-2, 4)


@pytest.mark.parametrize("z,text", [
    (h(-1, 3), "-1+3u"), (h(0, 3), "3u"), (h(1, 0), "1"), (h(0, 0), "0"),
    (h(0, -1), "-u"), (h(Fraction(-1, 3), 1), "-1/3+u"), (h(2, Fraction(-5, 2)), "2-5/2u"),
])
def test_text_form(z, text):
    assert str(z) == text
    assert Hyperbolic.parse(text) == z


def test_polynomial_scalars_print_with_parentheses():
    z = Hyperbolic(-(1 + 2 * X), 1 + 4 * X)
    assert str(z) == "(-1 - 2*x)+(1 + 4*x)u"
    assert str(Hyperbolic(UniPoly(), 1 + 2 * X)) == "(1 + 2*x)u"


def test_json_round_trip_polynomial():
    z = Hyperbolic(-(1 + 2 * X), UniPoly.const(3))
    assert Hyperbolic.from_json(z.to_json()) == z


@pytest.mark.parametrize("text", ["", "u3", "1 2", "3uu"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Hyperbolic.parse(text)


@settings(max_examples=100)
@given(hyperbolics, hyperbolics, hyperbolics)
def test_ring_laws(a, b, c):
    assert hyp_mul(a, b) == hyp_mul(b, a)
    assert hyp_mul(hyp_mul(a, b), c) == hyp_mul(a, hyp_mul(b, c))
    assert hyp_conj(hyp_mul(a, b)) == hyp_mul(hyp_conj(a), hyp_conj(b))


@settings(max_examples=100)
@given(hyperbolics, hyperbolics)
def test_split_is_ring_isomorphism(a, b):
    (a1, a2), (b1, b2) = hyp_split(a), hyp_split(b)
    assert hyp_split(hyp_mul(a, b)) == (a1 * b1, a2 * b2)
    assert hyp_split(a + b) == (a1 + b1, a2 + b2)
    assert hyp_join(*hyp_split(a)) == a


@given(hyperbolics)
def test_text_round_trip(z):
    assert Hyperbolic.parse(str(z)) == z
