"""Split quaternions a + bi + cj + dk over Q with i^2 = -1, j^2 = k^2 = 1, ij = k = -ji."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ring import parse_rational

__all__ = ["SplitQuat", "sq_mul", "sq_conj", "sq_norm", "ONE", "I", "J", "K"]

# _TABLE[(x, y)] = (sign, z): e_x * e_y = sign * e_z, basis order 1, i, j, k
_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (1, 0), (2, 3): (-1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}
_UNITS = ("", "i", "j", "k")


@dataclass(frozen=True)
class SplitQuat:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __neg__(self):
        return SplitQuat(*(-x for x in self.components))

    def __add__(self, other):
        if not isinstance(other, SplitQuat):
            other = SplitQuat(other)
        return SplitQuat(*(x + y for x, y in zip(self.components, other.components)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SplitQuat):
            return sq_mul(self, other)
        return SplitQuat(*(x * other for x in self.components))

    def __rmul__(self, other):
        return SplitQuat(*(other * x for x in self.components))

    def conj(self) -> SplitQuat:
        return sq_conj(self)

    def norm(self) -> Fraction:
        return sq_norm(self)

    def __str__(self):
        out = ""
        for x, unit in zip(self.components, _UNITS):
            if not x:
                continue
            mag = abs(x)
            body = str(mag) if not unit or mag != 1 else ""
            term = body + unit
            if out or x < 0:
                out += ("-" if x < 0 else "+") + term
            else:
                out = term
        return out or "0"

    def to_json(self) -> dict:
        return {name: str(x) for name, x in zip("abcd", self.components)}

    @classmethod
    def from_json(cls, data: dict) -> SplitQuat:
        return cls(*(parse_rational(data[name]) for name in "abcd"))

    _TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")

    @classmethod
    def parse(cls, text: str) -> SplitQuat:
        """Parse ``"1+2i-3k"``, ``"i"``, ``"-1/2j"`` and the like."""
        if re.search(r"[\dijk/]\s+[\dijk/]", text):
            raise ValueError(f"cannot parse split quaternion: {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty split quaternion")
        parts = [Fraction(0)] * 4
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse split quaternion: {text!r}")
            if pos and not m.group(1):
                raise ValueError(f"cannot parse split quaternion: {text!r}")
            v = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                v = -v
            parts[_UNITS.index(m.group(3))] += v
            pos = m.end()
        return cls(*parts)


ONE = SplitQuat(1)
I = SplitQuat(0, 1)
J = SplitQuat(0, 0, 1)
K = SplitQuat(0, 0, 0, 1)


def sq_mul(p: SplitQuat, q: SplitQuat) -> SplitQuat:
    out = [Fraction(0)] * 4
    for x, px in enumerate(p.components):
        if not px:
            continue
        for y, qy in enumerate(q.components):
            sign, z = _TABLE[x, y]
            out[z] += sign * px * qy
    return SplitQuat(*out)


def sq_conj(p: SplitQuat) -> SplitQuat:
    return SplitQuat(p.a, -p.b, -p.c, -p.d)


def sq_norm(p: SplitQuat) -> Fraction:
    """a^2 + b^2 - c^2 - d^2, cross-checked against p * conj(p)."""
    n = p.a * p.a + p.b * p.b - p.c * p.c - p.d * p.d
    assert sq_mul(p, sq_conj(p)) == SplitQuat(n), "norm is not p*conj(p)"
    return n
