"""Jacobsthal-type sequences, their split quaternions and spinors.

Integer and polynomial sequences live in append-only caches guarded by a
lock, so concurrent readers always see a consistent prefix.  Spinor terms
are assembled from those caches; the spinor recurrence is kept as a
separate path for cross-checking.
"""
from __future__ import annotations

import enum
import functools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .hyperbolic import Hyperbolic
from .ring import C, X, ExtElem, UniPoly
from .spinor import HypSpinor, PolySpinor, quat_to_spinor
from .splitquat import SplitQuat

__all__ = [
    "SeqKind", "BinetConstants", "jacobsthal", "jacobsthal_lucas",
    "split_quat_seq", "spinor_term", "spinor_term_recurrence",
    "binet_constants", "spinor_binet", "spinor_partial_sum",
    "jacobsthal_poly", "spinor_poly_term", "spinor_poly_term_recurrence",
    "ALPHA", "BETA", "poly_binet_coefficients", "poly_binet_numerator",
    "spinor_poly_binet", "spinor_poly_binet_ext",
    "printed_poly_binet_constants", "printed_poly_binet",
]


class SeqKind(enum.Enum):
    HSJ = "hsj"
    HSJL = "hsjl"


class _Cache:
    """Append-only second-order recurrence cache: s[n] = s[n-1] + m * s[n-2]."""

    def __init__(self, s0, s1, multiplier):
        self._terms = [s0, s1]
        self._mult = multiplier
        self._lock = threading.Lock()

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("index out of range")
        terms = self._terms
        if n < len(terms):
            return terms[n]
        with self._lock:
            while len(terms) <= n:
                terms.append(terms[-1] + self._mult * terms[-2])
            return terms[n]


_J = _Cache(0, 1, 2)
_JL = _Cache(2, 1, 2)
_JPOLY = _Cache(UniPoly(), UniPoly.const(1), 2 * X)


def _check_index(n: int) -> None:
    if n < 0:
        raise IndexError("index out of range")


def jacobsthal(n: int) -> int:
    _check_index(n)
    return _J[n]


def jacobsthal_lucas(n: int) -> int:
    _check_index(n)
    return _JL[n]


def _ints(kind: SeqKind):
    return jacobsthal if kind is SeqKind.HSJ else jacobsthal_lucas


def split_quat_seq(kind: SeqKind, n: int) -> SplitQuat:
    seq = _ints(kind)
    _check_index(n)
    return SplitQuat(seq(n), seq(n + 1), seq(n + 2), seq(n + 3))


def spinor_term(kind: SeqKind, n: int) -> HypSpinor:
    """[s_n + s_{n+3} u; -s_{n+1} + s_{n+2} u] from the integer caches."""
    seq = _ints(kind)
    _check_index(n)
    return HypSpinor(
        Hyperbolic(Fraction(seq(n)), Fraction(seq(n + 3))),
        Hyperbolic(Fraction(-seq(n + 1)), Fraction(seq(n + 2))),
    )


def spinor_term_recurrence(kind: SeqKind, n: int) -> HypSpinor:
    """Same term by iterating S_{k+2} = S_{k+1} + 2 S_k on spinors from the seeds."""
    _check_index(n)
    a = quat_to_spinor(split_quat_seq(kind, 0))
    b = quat_to_spinor(split_quat_seq(kind, 1))
    for _ in range(n):
        a, b = b, b + 2 * a
    return a


@dataclass(frozen=True)
class BinetConstants:
    """S_n = scale * (2^n A + sign * (-1)^n B)."""

    kind: SeqKind
    A: HypSpinor
    B: HypSpinor
    printed: bool = False

    @property
    def scale(self) -> Fraction:
        return Fraction(1, 3) if self.kind is SeqKind.HSJ else Fraction(1)

    @property
    def sign(self) -> int:
        return -1 if self.kind is SeqKind.HSJ else 1

    def evaluate(self, n: int) -> HypSpinor:
        _check_index(n)
        alt = 1 if n % 2 == 0 else -1
        return (self.A * (2 ** n) + self.B * (self.sign * alt)) * self.scale


_PRINTED_HSJ_A = HypSpinor(Hyperbolic(1, 8), Hyperbolic(0, 4))


@functools.lru_cache(maxsize=None)
def binet_constants(kind: SeqKind, printed: bool = False) -> BinetConstants:
    """Constants solved from the seed pair; ``printed`` swaps in the published HSJ A."""
    s0, s1 = spinor_term(kind, 0), spinor_term(kind, 1)
    # S_n = P 2^n + Q (-1)^n
    p = (s0 + s1) * Fraction(1, 3)
    q = (s0 * 2 - s1) * Fraction(1, 3)
    if kind is SeqKind.HSJ:
        a, b = p * 3, q * -3
        if printed:
            a = _PRINTED_HSJ_A
    else:
        a, b = p, q
    return BinetConstants(kind, a, b, printed)


def spinor_binet(kind: SeqKind, n: int, use_printed: bool = False) -> HypSpinor:
    return binet_constants(kind, use_printed).evaluate(n)


def spinor_partial_sum(kind: SeqKind, n: int, t: int) -> HypSpinor:
    """sum_{s=0}^{t} S_{n+s}, term by term."""
    if n < 0 or t < 0:
        raise IndexError("index out of range")
    total = spinor_term(kind, n)
    for s in range(1, t + 1):
        total = total + spinor_term(kind, n + s)
    return total


# ---------------------------------------------------------------------------
# Polynomial spinors


def jacobsthal_poly(n: int) -> UniPoly:
    _check_index(n)
    return _JPOLY[n]


def spinor_poly_term(n: int) -> PolySpinor:
    _check_index(n)
    jp = jacobsthal_poly
    return HypSpinor(
        Hyperbolic(jp(n), jp(n + 3)),
        Hyperbolic(-jp(n + 1), jp(n + 2)),
    )


def spinor_poly_term_recurrence(n: int) -> PolySpinor:
    _check_index(n)
    a, b = spinor_poly_term(0), spinor_poly_term(1)
    for _ in range(n):
        a, b = b, b + a * (2 * X)
    return a


ALPHA = (1 + C) / 2
BETA = (1 - C) / 2


@functools.lru_cache(maxsize=None)
def _alpha_pow(n: int) -> ExtElem:
    return ALPHA if n == 1 else ExtElem.coerce(1) if n == 0 else _alpha_pow(n - 1) * ALPHA


@functools.lru_cache(maxsize=None)
def _beta_pow(n: int) -> ExtElem:
    return BETA if n == 1 else ExtElem.coerce(1) if n == 0 else _beta_pow(n - 1) * BETA


def _lift(s: HypSpinor) -> HypSpinor:
    return s.map(ExtElem.coerce)


def poly_binet_coefficients() -> tuple[HypSpinor, HypSpinor]:
    """(P, Q) with HSJ_n(x) = P alpha^n + Q beta^n, solved from the seeds."""
    s0, s1 = _lift(spinor_poly_term(0)), _lift(spinor_poly_term(1))
    p = (s1 - s0 * BETA) / C
    q = (s0 * ALPHA - s1) / C
    return p, q


def poly_binet_numerator(n: int) -> HypSpinor:
    """c * HSJ_n(x) written without any division: (S1 - beta S0) alpha^n + (alpha S0 - S1) beta^n."""
    _check_index(n)
    lead, trail = _numerator_weights()
    return lead * _alpha_pow(n) + trail * _beta_pow(n)


@functools.lru_cache(maxsize=None)
def _numerator_weights() -> tuple[HypSpinor, HypSpinor]:
    s0, s1 = _lift(spinor_poly_term(0)), _lift(spinor_poly_term(1))
    return s1 - s0 * BETA, s0 * ALPHA - s1


def spinor_poly_binet_ext(n: int) -> HypSpinor:
    """The closed form evaluated in the extension ring, before any c-freeness check."""
    return poly_binet_numerator(n) / C


def spinor_poly_binet(n: int) -> PolySpinor:
    """Closed-form HSJ_n(x); raises if the result is not a polynomial spinor."""
    num = poly_binet_numerator(n)
    out = []
    for z in (num.c1.re, num.c1.hy, num.c2.re, num.c2.hy):
        # z = r + q c with r = 0 means c divides z exactly: z / c = q
        if not z.p.is_zero():
            raise ArithmeticError(f"numerator {z} is not divisible by c")
        out.append(z.q)
    if not all(v.is_poly() for v in out):
        raise ArithmeticError("closed form did not reduce to polynomials")
    a, b, c, d = (v.num for v in out)
    return HypSpinor(Hyperbolic(a, b), Hyperbolic(c, d))


def printed_poly_binet_constants() -> tuple[HypSpinor, HypSpinor]:
    """A(x), B(x) exactly as published."""
    x = ExtElem.coerce(X)
    a = HypSpinor(
        Hyperbolic(-1 + C, 4 * x + 1 + C),
        Hyperbolic(-1 - C, 4 * x + 1 + C),
    )
    b = HypSpinor(
        Hyperbolic(ExtElem.coerce(-2), C * (2 * x + 1) - 6 * x - 1),
        Hyperbolic(-1 - C, C - 4 * x - 1),
    )
    return a, b


@functools.lru_cache(maxsize=None)
def printed_poly_binet(n: int | None = None) -> HypSpinor:
    """(1/(2c))(A(x) alpha^n + B(x) beta^n); ``n=None`` takes the published form literally, without exponents."""
    a, b = printed_poly_binet_constants()
    k = 1 if n is None else n
    return (a * _alpha_pow(k) + b * _beta_pow(k)) / (2 * C)
