"""Hyperbolic (split-complex) numbers a + b*u with u**2 = +1.

The scalar ring is left open: rationals for integer sequences, polynomials
for the polynomial spinors, extension elements for the polynomial Binet
computation.  Any scalar type with ring operators and ``== 0`` works.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .ring import const_value, is_atomic, parse_rational, parse_scalar

__all__ = ["Hyperbolic", "U", "hyp_mul", "hyp_conj", "hyp_split", "hyp_join"]


@dataclass(frozen=True)
class Hyperbolic:
    re: Any = 0
    hy: Any = 0

    @classmethod
    def coerce(cls, value) -> Hyperbolic:
        return value if isinstance(value, Hyperbolic) else cls(value, 0)

    def map(self, fn) -> Hyperbolic:
        return Hyperbolic(fn(self.re), fn(self.hy))

    def is_zero(self) -> bool:
        return self.re == 0 and self.hy == 0

    def __neg__(self):
        return Hyperbolic(-self.re, -self.hy)

    def __add__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(self.re + other.re, self.hy + other.hy)
        return Hyperbolic(self.re + other, self.hy)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Hyperbolic):
            return hyp_mul(self, other)
        if _is_spinorish(other):
            return NotImplemented
        return Hyperbolic(self.re * other, self.hy * other)

    def __rmul__(self, other):
        if _is_spinorish(other):
            return NotImplemented
        return Hyperbolic(other * self.re, other * self.hy)

    def __truediv__(self, other):
        # division by a scalar only; hyperbolic divisors may be zero divisors
        if isinstance(other, Hyperbolic):
            a, b = hyp_split(other)
            x, y = hyp_split(self)
            return hyp_join(x / a, y / b)
        return Hyperbolic(self.re / other, self.hy / other)

    def conj(self) -> Hyperbolic:
        return hyp_conj(self)

    def split(self):
        return hyp_split(self)

    def __str__(self):
        re_part, hy_part = self.re, self.hy
        if hy_part == 0:
            return str(re_part)
        hc = const_value(hy_part)
        if hc is not None:
            if hc == 1:
                h, neg = "u", False
            elif hc == -1:
                h, neg = "u", True
            else:
                h, neg = f"{abs(hc)}u", hc < 0
        else:
            h, neg = f"({hy_part})u", False
        if re_part == 0:
            return ("-" if neg else "") + h
        r = str(re_part) if is_atomic(re_part) else f"({re_part})"
        return f"{r}{'-' if neg else '+'}{h}"

    def to_json(self) -> dict:
        return {"re": str(self.re), "hy": str(self.hy)}

    @classmethod
    def from_json(cls, data: dict) -> Hyperbolic:
        return cls(parse_scalar(data["re"]), parse_scalar(data["hy"]))

    _TERM = _re.compile(r"([+-]?)(\d+(?:/\d+)?)?(u?)")

    @classmethod
    def parse(cls, text: str) -> Hyperbolic:
        """Parse the rational printed form, e.g. ``"-1+3u"`` or ``"-u"``."""
        if _re.search(r"[\du/]\s+[\du/]", text):
            raise ValueError(f"cannot parse hyperbolic number: {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty hyperbolic number")
        re_part, hy_part = Fraction(0), Fraction(0)
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse hyperbolic number: {text!r}")
            if pos and not m.group(1):
                raise ValueError(f"cannot parse hyperbolic number: {text!r}")
            v = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                v = -v
            if m.group(3):
                hy_part += v
            else:
                re_part += v
            pos = m.end()
        return cls(re_part, hy_part)


def _is_spinorish(value) -> bool:
    # defer to HypSpinor.__rmul__ without importing it
    return hasattr(value, "c1") and hasattr(value, "c2")


U = Hyperbolic(0, 1)


def hyp_mul(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(a.re * b.re + a.hy * b.hy, a.re * b.hy + a.hy * b.re)


def hyp_conj(a: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(a.re, -a.hy)


def hyp_split(a: Hyperbolic):
    """Coordinates (a+b, a-b) on the idempotents (1+u)/2 and (1-u)/2."""
    return a.re + a.hy, a.re - a.hy


def hyp_join(plus, minus) -> Hyperbolic:
    return Hyperbolic((plus + minus) / 2, (plus - minus) / 2)
