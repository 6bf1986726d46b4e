"""Exact rationals and dense univariate polynomials over Q.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator, zero is 0/1).  :class:`Poly` stores coefficients lowest degree
first with the leading coefficient nonzero; the zero polynomial is the empty
tuple and has degree -1.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce an int, Fraction or string ``"p/q"`` to a Fraction.

    Floats are refused so that nothing inexact leaks in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot make a rational from {type(value).__name__}")


def rat_str(q: Fraction) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-rat(r), 1])
        return p

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(rat(c) for c in data)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{rat_str(c)}{'*' + mono if mono else ''}")
        return "Poly(" + " + ".join(terms).replace("+ -", "- ") + ")"

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        o = self._coerce(other).coeffs
        s = self.coeffs
        if len(s) < len(o):
            s, o = o, s
        return Poly([c + (o[i] if i < len(o) else 0) for i, c in enumerate(s)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = rat(other)
            return Poly([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lc = d.degree, d.lc
        if len(rem) - 1 < dd:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lc
            quo[k] = q
            if q:
                for i, c in enumerate(d.coeffs):
                    rem[k + i] -= q * c
        return Poly(quo), Poly(rem[:dd])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, Poly) else rat(acc)

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def padded(self, n: int) -> tuple[Fraction, ...]:
        """Coefficient tuple padded with zeros to length ``n``."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in {n} coefficients")
        return self.coeffs + (Fraction(0),) * (n - len(self.coeffs))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` the monic gcd."""
    r0, r1 = f, g
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise ValueError("the zero polynomial is not squarefree")
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(f: Poly, g: Poly) -> Fraction:
    """Sylvester resultant, ``lc(f)^deg g * prod g(alpha)`` over roots of ``f``.

    With this convention res(x - a, x - b) = a - b.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = f.degree, g.degree
    sign = 1
    acc = Fraction(1)
    # res(f, g) = (-1)^(mn) lc(g)^(m - deg r) res(g, r) with r = f mod g
    while True:
        if n == 0:
            return sign * acc * g.lc ** m
        if m == 0:
            return sign * acc * f.lc ** n
        r = f % g
        if r.is_zero():
            return Fraction(0)
        if (m * n) % 2:
            sign = -sign
        acc *= g.lc ** (m - r.degree)
        f, g = g, r
        m, n = n, r.degree


def discriminant(f: Poly) -> Fraction:
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc
