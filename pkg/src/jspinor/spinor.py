"""Hyperbolic spinors and the split-quaternion correspondence.

A spinor is a column [c1; c2] of hyperbolic numbers.  The correspondence
sends a + bi + cj + dk to [a + d*u; -b + c*u]; the three conjugations are
the componentwise bar, ``u * C * bar`` and ``-C * bar`` with
C = [[0, 1], [-1, 0]].
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .hyperbolic import U, Hyperbolic
from .splitquat import SplitQuat, sq_conj

__all__ = [
    "HypSpinor", "PolySpinor", "SPIN_C", "mat_mul", "mat_apply",
    "quat_to_spinor", "spinor_bar", "spinor_tilde", "spinor_mate",
    "spinor_star", "isotropic_vector",
]


@dataclass(frozen=True)
class HypSpinor:
    c1: Hyperbolic
    c2: Hyperbolic

    def __post_init__(self):
        object.__setattr__(self, "c1", Hyperbolic.coerce(self.c1))
        object.__setattr__(self, "c2", Hyperbolic.coerce(self.c2))

    def map(self, fn) -> HypSpinor:
        """Apply ``fn`` to every scalar (all four of them)."""
        return HypSpinor(self.c1.map(fn), self.c2.map(fn))

    def is_zero(self) -> bool:
        return self.c1.is_zero() and self.c2.is_zero()

    def __neg__(self):
        return HypSpinor(-self.c1, -self.c2)

    def __add__(self, other):
        if not isinstance(other, HypSpinor):
            return NotImplemented
        return HypSpinor(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, HypSpinor):
            return NotImplemented
        return HypSpinor(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, scalar):
        if isinstance(scalar, HypSpinor):
            return NotImplemented
        return HypSpinor(self.c1 * scalar, self.c2 * scalar)

    def __rmul__(self, scalar):
        return HypSpinor(scalar * self.c1, scalar * self.c2)

    def __truediv__(self, scalar):
        return HypSpinor(self.c1 / scalar, self.c2 / scalar)

    def bar(self) -> HypSpinor:
        return spinor_bar(self)

    def __str__(self):
        return f"[{self.c1}; {self.c2}]"

    def to_json(self) -> dict:
        return {"c1": self.c1.to_json(), "c2": self.c2.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> HypSpinor:
        return cls(Hyperbolic.from_json(data["c1"]), Hyperbolic.from_json(data["c2"]))

    @classmethod
    def parse(cls, text: str) -> HypSpinor:
        m = re.fullmatch(r"\s*\[([^;\]]*);([^;\]]*)\]\s*", text)
        if not m:
            raise ValueError(f"cannot parse spinor: {text!r}")
        return cls(Hyperbolic.parse(m.group(1)), Hyperbolic.parse(m.group(2)))


# Same type; the name marks polynomial scalars.
PolySpinor = HypSpinor

SPIN_C = ((0, 1), (-1, 0))


def mat_mul(m, n):
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_apply(m, s: HypSpinor) -> HypSpinor:
    (a, b), (c, d) = m
    return HypSpinor(s.c1 * a + s.c2 * b, s.c1 * c + s.c2 * d)


def quat_to_spinor(q: SplitQuat) -> HypSpinor:
    return HypSpinor(Hyperbolic(q.a, q.d), Hyperbolic(-q.b, q.c))


def spinor_bar(s: HypSpinor) -> HypSpinor:
    return HypSpinor(s.c1.conj(), s.c2.conj())


def spinor_tilde(s: HypSpinor) -> HypSpinor:
    return U * mat_apply(SPIN_C, spinor_bar(s))


def spinor_mate(s: HypSpinor) -> HypSpinor:
    return -mat_apply(SPIN_C, spinor_bar(s))


def spinor_star(q: SplitQuat) -> HypSpinor:
    """Spinor of the conjugate quaternion."""
    return quat_to_spinor(sq_conj(q))


def isotropic_vector(phi1: Hyperbolic, phi2: Hyperbolic):
    """Vector (phi1^2 - phi2^2, u(phi1^2 + phi2^2), -2 phi1 phi2) and its form value.

    Returns ``((a1, a2, a3), q)`` where ``q = a1^2 + a2^2 - a3^2`` is computed
    in the hyperbolic ring.  With u^2 = +1 the form is 2(phi1^2 - phi2^2)^2,
    so it is reported rather than assumed to vanish.
    """
    phi1, phi2 = Hyperbolic.coerce(phi1), Hyperbolic.coerce(phi2)
    sq1, sq2 = phi1 * phi1, phi2 * phi2
    a1 = sq1 - sq2
    a2 = U * (sq1 + sq2)
    a3 = -2 * (phi1 * phi2)
    q = a1 * a1 + a2 * a2 - a3 * a3
    return (a1, a2, a3), q
