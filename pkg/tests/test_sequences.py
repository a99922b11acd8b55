import threading
from fractions import Fraction
from math import comb

import pytest
import sympy

from jspinor.hyperbolic import Hyperbolic
from jspinor.ring import UniPoly
from jspinor.sequences import (
    SeqKind, binet_constants, jacobsthal, jacobsthal_lucas, jacobsthal_poly,
    spinor_binet, spinor_partial_sum, spinor_poly_binet, spinor_poly_binet_ext,
    spinor_poly_term, spinor_poly_term_recurrence, spinor_term,
    spinor_term_recurrence, split_quat_seq,
)
from jspinor.spinor import HypSpinor, quat_to_spinor
from jspinor.splitquat import SplitQuat, sq_norm

x = sympy.Symbol("x")


def j_closed(n):
    return (2 ** n - (-1) ** n) // 3


def jl_closed(n):
    return 2 ** n + (-1) ** n


def sp(a, b, c, d):
    return HypSpinor(Hyperbolic(a, b), Hyperbolic(c, d))


def to_sympy(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(p.coeffs))


def jpoly_oracle(n):
    return sympy.expand(sum(comb(n - 1 - k, k) * (2 * x) ** k for k in range(n // 2 + 1) if n - 1 - k >= k))


def test_integer_prefixes():
    assert [jacobsthal(n) for n in range(8)] == [0, 1, 1, 3, 5, 11, 21, 43]
    assert [jacobsthal_lucas(n) for n in range(6)] == [2, 1, 5, 7, 17, 31]


@pytest.mark.parametrize("n", [0, 1, 2, 17, 64, 200])
def test_integer_closed_forms(n):
    assert jacobsthal(n) == j_closed(n)
    assert jacobsthal_lucas(n) == jl_closed(n)


@pytest.mark.parametrize("fn", [jacobsthal, jacobsthal_lucas, jacobsthal_poly])
def test_negative_index(fn):
    with pytest.raises(IndexError):
        fn(-1)


def test_split_quaternion_terms():
    assert split_quat_seq(SeqKind.HSJ, 0) == SplitQuat(0, 1, 1, 3)
    assert split_quat_seq(SeqKind.HSJL, 0) == SplitQuat(2, 1, 5, 7)
    assert sq_norm(split_quat_seq(SeqKind.HSJ, 0)) == -9


def test_spinor_seeds():
    assert spinor_term(SeqKind.HSJ, 0) == sp(0, 3, -1, 1)
    assert spinor_term(SeqKind.HSJ, 1) == sp(1, 5, -1, 3)
    assert spinor_term(SeqKind.HSJ, 2) == sp(1, 11, -3, 5)
    assert spinor_term(SeqKind.HSJL, 0) == sp(2, 7, -1, 5)
    assert spinor_term(SeqKind.HSJL, 1) == sp(1, 17, -5, 7)


@pytest.mark.parametrize("kind", list(SeqKind))
def test_correspondence_and_norm(kind):
    ints = j_closed if kind is SeqKind.HSJ else jl_closed
    for n in range(65):
        assert quat_to_spinor(split_quat_seq(kind, n)) == spinor_term(kind, n)
        a, b, c, d = (ints(n + i) for i in range(4))
        assert sq_norm(split_quat_seq(kind, n)) == a * a + b * b - c * c - d * d


@pytest.mark.parametrize("kind", list(SeqKind))
def test_recurrence_path_agrees(kind):
    for n in range(40):
        assert spinor_term_recurrence(kind, n) == spinor_term(kind, n)


def test_binet_constants():
    k = binet_constants(SeqKind.HSJ)
    assert k.A == sp(1, 8, -2, 4)
    assert k.B == sp(1, -1, 1, 1)
    assert binet_constants(SeqKind.HSJ, printed=True).A == sp(1, 8, 0, 4)


@pytest.mark.parametrize("kind", list(SeqKind))
def test_binet_matches_recurrence(kind):
    for n in range(257):
        assert spinor_binet(kind, n) == spinor_term(kind, n)


def test_three_times_binet_is_integral():
    for n in range(30):
        s = spinor_binet(SeqKind.HSJ, n) * 3
        assert all(Fraction(v).denominator == 1 for h in (s.c1, s.c2) for v in (h.re, h.hy))


def test_printed_binet_misses_first_seed():
    assert spinor_binet(SeqKind.HSJ, 0, use_printed=True) == sp(0, 3, Fraction(-1, 3), 1)
    assert spinor_binet(SeqKind.HSJ, 0, use_printed=True) != spinor_term(SeqKind.HSJ, 0)


def test_partial_sum():
    total = sum((spinor_term(SeqKind.HSJ, k) for k in range(3, 6)), sp(0, 0, 0, 0))
    assert spinor_partial_sum(SeqKind.HSJ, 3, 2) == total


def test_poly_seeds():
    assert str(spinor_poly_term(0)) == "[(1 + 2*x)u; -1+u]"
    assert str(spinor_poly_term(1)) == "[1+(1 + 4*x)u; -1+(1 + 2*x)u]"


@pytest.mark.parametrize("n", range(12))
def test_jacobsthal_poly_against_binomial_sum(n):
    assert sympy.expand(to_sympy(jacobsthal_poly(n)) - jpoly_oracle(n)) == 0


def test_poly_at_one_recovers_integer_spinor():
    for n in range(65):
        assert spinor_poly_term(n).map(lambda p: p(1)) == spinor_term(SeqKind.HSJ, n)


def test_poly_recurrence_path_agrees():
    for n in range(20):
        assert spinor_poly_term_recurrence(n) == spinor_poly_term(n)


def test_poly_binet_is_c_free():
    for n in range(33):
        assert spinor_poly_binet(n) == spinor_poly_term(n)


def test_poly_binet_extension_form_has_zero_c_part():
    s = spinor_poly_binet_ext(3)
    for z in (s.c1.re, s.c1.hy, s.c2.re, s.c2.hy):
        assert z.is_c_free()


def test_concurrent_cache_fill():
    results = {}

    def work(tid):
        results[tid] = [spinor_term(SeqKind.HSJL, n) for n in range(300, 340)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = results[0]
    assert all(r == first for r in results.values())
    assert first[0] == spinor_binet(SeqKind.HSJL, 300)
