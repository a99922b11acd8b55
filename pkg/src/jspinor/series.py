"""Truncated power series with spinor (or scalar) coefficients.

Used to expand the generating functions N(x) / (1 - x - 2*lam*x^2) and
compare coefficients with sequence terms.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .hyperbolic import Hyperbolic
from .ring import X, UniPoly
from .sequences import SeqKind, spinor_poly_term, spinor_term
from .spinor import HypSpinor

__all__ = [
    "TruncatedSeries", "denom_inverse", "gen_function_numerator",
    "gen_function_series", "poly_gen_numerator", "poly_gen_series",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """sum coeffs[n] * x^n modulo x^(order+1)."""

    order: int
    coeffs: tuple[Any, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        cs = tuple(self.coeffs)[: self.order + 1]
        if len(cs) < self.order + 1:
            if not cs:
                raise ValueError("need at least one coefficient to infer the zero")
            zero = cs[0] - cs[0]
            cs = cs + (zero,) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(min(order, self.order), self.coeffs)

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Cauchy product; a plain (non-series) operand scales every coefficient."""
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.order, tuple(c * other for c in self.coeffs))
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(n, tuple(out))

    def __rmul__(self, other):
        return TruncatedSeries(self.order, tuple(other * c for c in self.coeffs))

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self.coeffs[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(acc * inv0))
        return TruncatedSeries(self.order, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return TruncatedSeries(self.order, tuple(c / other for c in self.coeffs))

    def to_json(self) -> list:
        return [{"n": n, "coeff": _coeff_json(c)} for n, c in enumerate(self.coeffs)]

    @classmethod
    def from_json(cls, data: list) -> TruncatedSeries:
        coeffs = [_coeff_from_json(item["coeff"]) for item in sorted(data, key=lambda d: d["n"])]
        return cls(len(coeffs) - 1, tuple(coeffs))


def _coeff_json(c):
    if isinstance(c, HypSpinor):
        return c.to_json()
    if isinstance(c, Hyperbolic):
        return c.to_json()
    return str(c)


def _coeff_from_json(d):
    from .ring import parse_scalar

    if isinstance(d, str):
        return parse_scalar(d)
    if "c1" in d:
        return HypSpinor.from_json(d)
    return Hyperbolic.from_json(d)


def denom_inverse(lam, order: int) -> TruncatedSeries:
    """Coefficients of 1/(1 - x - 2*lam*x^2): a_0 = a_1 = 1, a_n = a_{n-1} + 2*lam*a_{n-2}."""
    if order < 0:
        raise ValueError("order must be non-negative")
    one = lam ** 0 if isinstance(lam, UniPoly) else Fraction(1)
    out = [one, one]
    for _ in range(2, order + 1):
        out.append(out[-1] + 2 * lam * out[-2])
    return TruncatedSeries(order, tuple(out[: order + 1]))


def _spinor_series(numerator: Sequence[HypSpinor], denom: TruncatedSeries) -> TruncatedSeries:
    # numerator is a polynomial in x; pad with zero spinors up to the order
    zero = numerator[0] - numerator[0]
    num = TruncatedSeries(denom.order, tuple(numerator) + (zero,) * denom.order)
    return num * denom


_PRINTED_NUMERATORS = {
    # (constant term, x coefficient) as published
    SeqKind.HSJ: (
        -HypSpinor(Hyperbolic(1, 8), Hyperbolic(-2, 4)),
        HypSpinor(Hyperbolic(0, 3), Hyperbolic(-1, 2)),
    ),
    SeqKind.HSJL: (
        HypSpinor(Hyperbolic(1, 8), Hyperbolic(-2, 4)) * -3,
        HypSpinor(Hyperbolic(2, 7), Hyperbolic(-1, 5)),
    ),
}


def gen_function_numerator(kind: SeqKind, use_printed: bool = False) -> tuple[HypSpinor, HypSpinor]:
    """Numerator coefficients (constant, x) over 1 - x - 2x^2."""
    if use_printed:
        return _PRINTED_NUMERATORS[kind]
    s0, s1 = spinor_term(kind, 0), spinor_term(kind, 1)
    return s0, s1 - s0


@functools.lru_cache(maxsize=64)
def gen_function_series(kind: SeqKind, order: int, use_printed: bool = False) -> TruncatedSeries:
    return _spinor_series(gen_function_numerator(kind, use_printed), denom_inverse(1, order))


def poly_gen_numerator(use_printed: bool = False) -> tuple[HypSpinor, HypSpinor]:
    """Numerator coefficients (constant, t) over 1 - t - 2x t^2.

    Corrected: (1 - t) HSJ_0(x) + t HSJ_1(x).  Published: (1 - t) P + Q with
    P = [(2x+1)u; -1+u] and Q = [1+(4x+1)u; -1+(2x+1)u].
    """
    s0, s1 = spinor_poly_term(0), spinor_poly_term(1)
    if use_printed:
        p = HypSpinor(Hyperbolic(UniPoly(), 2 * X + 1), Hyperbolic(UniPoly.const(-1), UniPoly.const(1)))
        q = HypSpinor(Hyperbolic(UniPoly.const(1), 4 * X + 1), Hyperbolic(UniPoly.const(-1), 2 * X + 1))
        return p + q, -p
    return s0, s1 - s0


@functools.lru_cache(maxsize=64)
def poly_gen_series(order: int, use_printed: bool = False) -> TruncatedSeries:
    return _spinor_series(poly_gen_numerator(use_printed), denom_inverse(X, order))
