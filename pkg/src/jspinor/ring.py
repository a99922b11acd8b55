"""Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction`.  On top of them this module builds
dense univariate polynomials over Q, rational functions in the same
indeterminate, and the quadratic extension Q(x)[c] with c**2 = 8x + 1 that
hosts the roots of t**2 - t - 2x.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "rat_normalize", "parse_rational", "UniPoly", "RatFunc", "ExtElem",
    "X", "C", "DISCRIMINANT", "poly_mul", "poly_eval", "ext_mul", "ext_div",
    "parse_scalar",
]


def rat_normalize(num: int, den: int) -> Fraction:
    """Canonical reduced rational num/den with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not an exact rational: {text!r}")
    num, _, den = text.partition("/")
    return rat_normalize(int(num), int(den) if den else 1)


def _is_rational(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


# ---------------------------------------------------------------------------
# Univariate polynomials


@dataclass(frozen=True, eq=False)
class UniPoly:
    """Dense polynomial in x; ``coeffs[k]`` is the coefficient of x**k."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [c if type(c) is Fraction else Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, value) -> UniPoly:
        return cls((Fraction(value),))

    @classmethod
    def coerce(cls, value) -> UniPoly:
        if isinstance(value, UniPoly):
            return value
        if _is_rational(value):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to UniPoly")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if _is_rational(other):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_const():
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        try:
            other = UniPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self + (-UniPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_rational(other):
            f = Fraction(other)
            return UniPoly(tuple(c * f for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        """Division by a rational or by an exact polynomial divisor."""
        if _is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero polynomial")
            f = Fraction(other)
            return UniPoly(tuple(c / f for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __rtruediv__(self, other):
        # only constants are units of Q[x]
        if not self.is_const() or self.is_zero():
            raise ValueError(f"{self} is not a unit")
        return UniPoly.coerce(other) / self.coeffs[0]

    def __divmod__(self, other):
        other = UniPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv_lead = 1 / other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            f = rem[k] * inv_lead
            if f:
                quot[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem[:dq]))

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> UniPoly:
        return self / self.lead if self.coeffs else self

    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, UniPoly.coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, at):
        return poly_eval(self, at)

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            term = str(mag) if k == 0 else f"{mag}*x" + (f"^{k}" if k > 1 else "")
            if not out:
                out = ("-" if c < 0 else "") + term
            else:
                out += (" - " if c < 0 else " + ") + term
        return out

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    _TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*x(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> UniPoly:
        """Parse the printed form, e.g. ``"1 - 2*x + 4*x^2"``."""
        if re.search(r"[\dx]\s+[\dx]", text):
            raise ValueError(f"missing operator in polynomial: {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s == "0":
            return cls()
        coeffs: dict[int, Fraction] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial: {text!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in polynomial: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
            k = 0
            if m.group(3):
                if m.group(2) is None and m.group(3).startswith("*"):
                    raise ValueError(f"cannot parse polynomial: {text!r}")
                k = int(m.group(4)) if m.group(4) else 1
            coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
            pos = m.end()
        top = max(coeffs)
        return cls(tuple(coeffs.get(k, Fraction(0)) for k in range(top + 1)))


X = UniPoly((0, 1))
_ONE_POLY = UniPoly((1,))
DISCRIMINANT = 8 * X + 1


def poly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    return p * q


def poly_eval(p: UniPoly, at) -> Fraction:
    """Horner evaluation at an exact rational point."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc


# ---------------------------------------------------------------------------
# Rational functions


@dataclass(frozen=True, eq=False)
class RatFunc:
    """num/den in lowest terms with a monic denominator."""

    num: UniPoly
    den: UniPoly = UniPoly((1,))

    def __post_init__(self):
        num, den = UniPoly.coerce(self.num), UniPoly.coerce(self.den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = UniPoly(), _ONE_POLY
        elif den.is_const():
            if den.coeffs[0] != 1:
                num, den = num / den.lead, _ONE_POLY
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.lead
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        return cls(UniPoly.coerce(value))

    def is_poly(self) -> bool:
        return self.den.is_const()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(self.num) if self.is_poly() else hash((self.num, self.den))

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self + (-RatFunc.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# The extension Q(x)[c], c**2 = 8x + 1


@dataclass(frozen=True, eq=False)
class ExtElem:
    """p + q*c with rational-function parts and c**2 = 8x + 1."""

    p: RatFunc
    q: RatFunc = RatFunc(UniPoly())

    def __post_init__(self):
        object.__setattr__(self, "p", RatFunc.coerce(self.p))
        object.__setattr__(self, "q", RatFunc.coerce(self.q))

    @classmethod
    def coerce(cls, value) -> ExtElem:
        if isinstance(value, ExtElem):
            return value
        return cls(RatFunc.coerce(value))

    def conj(self) -> ExtElem:
        return ExtElem(self.p, -self.q)

    def norm(self) -> RatFunc:
        """z * conj(z), which never involves c."""
        return self.p * self.p - self.q * self.q * DISCRIMINANT

    def is_c_free(self) -> bool:
        return self.q.is_zero()

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def as_poly(self) -> UniPoly:
        if not self.is_c_free() or not self.p.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.p.num

    def __eq__(self, other):
        try:
            other = ExtElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash(self.p) if self.q.is_zero() else hash((self.p, self.q))

    def __neg__(self):
        return ExtElem(-self.p, -self.q)

    def __add__(self, other):
        try:
            o = ExtElem.coerce(other)
        except TypeError:
            return NotImplemented
        return ExtElem(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self + (-ExtElem.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = ExtElem.coerce(other)
        except TypeError:
            return NotImplemented
        return ext_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = ExtElem.coerce(other)
        except TypeError:
            return NotImplemented
        return ext_div(self, o)

    def __rtruediv__(self, other):
        return ext_div(ExtElem.coerce(other), self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ExtElem.coerce(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        if self.q.is_zero():
            return str(self.p)
        qc = "c" if self.q == 1 else f"({self.q})*c"
        if self.p.is_zero():
            return qc
        return f"({self.p}) + {qc}"

    __repr__ = __str__


C = ExtElem(RatFunc(UniPoly()), RatFunc(UniPoly.const(1)))


def ext_mul(a: ExtElem, b: ExtElem) -> ExtElem:
    """(p+qc)(r+sc) = (pr + qs(8x+1)) + (ps+qr)c."""
    return ExtElem(a.p * b.p + a.q * b.q * DISCRIMINANT, a.p * b.q + a.q * b.p)


def ext_div(a: ExtElem, b: ExtElem) -> ExtElem:
    if b.p.is_zero() and not b.q.is_zero() and b.q.is_poly() and b.q.num.is_const():
        # (p + qc) / (kc) = q/k + p/(k(8x+1)) c
        k = b.q.num.coeffs[0]
        return ExtElem(a.q / k, a.p / (DISCRIMINANT * k))
    n = b.norm()
    if n.is_zero():
        raise ZeroDivisionError(f"non-invertible divisor {b}")
    t = ext_mul(a, b.conj())
    return ExtElem(t.p / n, t.q / n)


# ---------------------------------------------------------------------------
# Scalar text forms shared by the other modules

def parse_scalar(text: str):
    """Rational if the text has no indeterminate, else a polynomial."""
    if "x" in text:
        return UniPoly.parse(text)
    return parse_rational(text)


def is_atomic(value) -> bool:
    """True if the printed scalar needs no parentheses next to a unit."""
    if isinstance(value, _RationalABC):
        return True
    if isinstance(value, UniPoly):
        return value.is_const()
    if isinstance(value, RatFunc):
        return value.is_poly() and value.num.is_const()
    if isinstance(value, ExtElem):
        return value.is_c_free() and is_atomic(value.p)
    return False


def const_value(value):
    """The rational value of a constant scalar, or None."""
    if _is_rational(value):
        return Fraction(value)
    if isinstance(value, UniPoly) and value.is_const():
        return value.coeffs[0] if value.coeffs else Fraction(0)
    if isinstance(value, RatFunc) and value.is_poly():
        return const_value(value.num)
    if isinstance(value, ExtElem) and value.is_c_free():
        return const_value(value.p)
    return None

