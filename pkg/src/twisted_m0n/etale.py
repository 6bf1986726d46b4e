"""Étale algebras ``E = Q[x]/(p_1) x ... x Q[x]/(p_r)``.

Each ``p_i`` is monic and squarefree (irreducibility is never needed), and the
concatenated power bases ``1, x, ..., x^(deg p_i - 1)`` give the distinguished
Q-basis in which elements are stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvariantViolation, NotAUnit, NotSquarefree, ParentMismatch, ValidationError
from .exactnum import Poly, is_squarefree, poly_xgcd, rat, rat_str
from .linal import Matrix, det, solve

GENERATOR_SEARCH_CAP = 10**6


@dataclass(frozen=True)
class EtaleAlgebra:
    factors: tuple[Poly, ...]

    def __post_init__(self):
        facs = tuple(f if isinstance(f, Poly) else Poly(f) for f in self.factors)
        object.__setattr__(self, "factors", facs)
        if not facs:
            raise ValidationError("an étale algebra needs at least one factor")
        for i, p in enumerate(facs):
            if p.degree < 1:
                raise ValidationError("factor of degree < 1", factor=i)
            if p.lc != 1:
                raise ValidationError("factor is not monic", factor=i)
            if not is_squarefree(p):
                raise NotSquarefree(f"factor {i} is not squarefree: {p!r}", factor=i)

    @classmethod
    def split(cls, n_or_roots) -> "EtaleAlgebra":
        """Split algebra Q^n with factors ``x - d``; default roots 0..n-1."""
        roots = range(n_or_roots) if isinstance(n_or_roots, int) else n_or_roots
        return cls(tuple(Poly([-rat(d), 1]) for d in roots))

    @classmethod
    def from_json(cls, data: dict) -> "EtaleAlgebra":
        return cls(tuple(Poly.from_json(f) for f in data["factors"]))

    def to_json(self) -> dict:
        return {"factors": [p.to_json() for p in self.factors]}

    @cached_property
    def degree(self) -> int:
        return sum(p.degree for p in self.factors)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for p in self.factors:
            out.append(k)
            k += p.degree
        return tuple(out)

    # -- elements ----------------------------------------------------------
    def element(self, coords: Iterable) -> "AlgElement":
        return AlgElement(self, tuple(rat(c) for c in coords))

    def zero(self) -> "AlgElement":
        return self.element([0] * self.degree)

    def one(self) -> "AlgElement":
        return self.from_components([Poly([1])] * len(self.factors))

    def scalar(self, c) -> "AlgElement":
        return self.one() * rat(c)

    def basis(self) -> list["AlgElement"]:
        n = self.degree
        return [self.element([1 if j == i else 0 for j in range(n)]) for i in range(n)]

    def gen(self) -> "AlgElement":
        """The class of x in every factor."""
        return self.from_components([Poly.x()] * len(self.factors))

    def components(self, u: "AlgElement") -> list[Poly]:
        return [Poly(u.coords[o:o + p.degree]) for o, p in zip(self.offsets, self.factors)]

    def from_components(self, comps: Sequence[Poly]) -> "AlgElement":
        coords: list[Fraction] = []
        for c, p in zip(comps, self.factors):
            coords.extend((c % p).padded(p.degree))
        return AlgElement(self, tuple(coords))

    # -- trace form --------------------------------------------------------
    @cached_property
    def _basis_traces(self) -> tuple[Fraction, ...]:
        return tuple(sum(mult_matrix(b)[i][i] for i in range(self.degree)) for b in self.basis())

    def trace(self, u: "AlgElement") -> Fraction:
        return sum((c * t for c, t in zip(u.coords, self._basis_traces)), Fraction(0))

    @cached_property
    def trace_gram(self) -> Matrix:
        b = self.basis()
        return tuple(tuple(self.trace(x * y) for y in b) for x in b)


@dataclass(frozen=True)
class AlgElement:
    parent: EtaleAlgebra
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.parent.degree:
            raise ValidationError("coordinate vector has the wrong length",
                                  expected=self.parent.degree, got=len(self.coords))

    def _same(self, other: "AlgElement") -> None:
        if not isinstance(other, AlgElement) or (
                other.parent is not self.parent and other.parent != self.parent):
            raise ParentMismatch("elements live in different algebras")

    def __add__(self, other):
        self._same(other)
        return AlgElement(self.parent, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return AlgElement(self.parent, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgElement(self.parent, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        c = rat(other)
        return AlgElement(self.parent, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        result, base = self.parent.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_json(self) -> dict:
        return {"coords": [rat_str(c) for c in self.coords]}


def mul(u: AlgElement, v: AlgElement) -> AlgElement:
    u._same(v)
    e = u.parent
    return e.from_components([a * b for a, b in zip(e.components(u), e.components(v))])


def add(u: AlgElement, v: AlgElement) -> AlgElement:
    return u + v


def sub(u: AlgElement, v: AlgElement) -> AlgElement:
    return u - v


def scalar_mul(c, u: AlgElement) -> AlgElement:
    return u * rat(c)


def inverse(u: AlgElement) -> AlgElement:
    e = u.parent
    comps = []
    for i, (c, p) in enumerate(zip(e.components(u), e.factors)):
        d, s, _ = poly_xgcd(c, p)
        if d.degree != 0:
            raise NotAUnit(f"component {i} shares a root with its factor", factor=i)
        comps.append(s)
    return e.from_components(comps)


def mult_matrix(u: AlgElement) -> Matrix:
    """Matrix of ``x -> u x``; column j holds the coordinates of ``u * e_j``."""
    cols = [(u * b).coords for b in u.parent.basis()]
    return tuple(zip(*cols))


def _charpoly_matrix(m: Sequence[Sequence[Fraction]]) -> Poly:
    # Faddeev-LeVerrier; exact since char 0
    k = len(m)
    c = [Fraction(0)] * (k + 1)
    c[k] = Fraction(1)
    mk = [[Fraction(0)] * k for _ in range(k)]
    for i in range(1, k + 1):
        prod = [[sum((m[r][j] * mk[j][col] for j in range(k)), Fraction(0)) for col in range(k)]
                for r in range(k)]
        for r in range(k):
            prod[r][r] += c[k - i + 1]
        mk = prod
        tr = sum((m[r][j] * mk[j][r] for r in range(k) for j in range(k)), Fraction(0))
        c[k - i] = -tr / i
    return Poly(c)


def char_poly(u: AlgElement) -> Poly:
    """Characteristic polynomial of multiplication by ``u``.

    The multiplication matrix is block diagonal along the factors, so the
    result is the product of the per-factor characteristic polynomials.
    """
    e = u.parent
    m = mult_matrix(u)
    result = Poly([1])
    for o, p in zip(e.offsets, e.factors):
        block = [row[o:o + p.degree] for row in m[o:o + p.degree]]
        result = result * _charpoly_matrix(block)
    return result


def trace(u: AlgElement) -> Fraction:
    return u.parent.trace(u)


def norm(u: AlgElement) -> Fraction:
    c0 = char_poly(u).coeffs[0]
    return -c0 if u.parent.degree % 2 else c0


def has_distinct_eigenvalues(u: AlgElement) -> bool:
    return is_squarefree(char_poly(u))


def trace_gram_det(e: EtaleAlgebra) -> Fraction:
    return det(e.trace_gram)


def trace_dual(e: EtaleAlgebra, functional: Sequence) -> AlgElement:
    """The unique ``c`` with ``functional(x) == trace(c x)`` for all ``x``."""
    if len(functional) != e.degree:
        raise ValidationError("functional has the wrong length")
    return e.element(solve(e.trace_gram, [rat(x) for x in functional]))


def _shifted_generator(e: EtaleAlgebra, m: int) -> AlgElement:
    return e.from_components([Poly([m * (i + 1), 1]) for i in range(len(e.factors))])


def find_generator(e: EtaleAlgebra, seed: int = 0) -> AlgElement:
    """Deterministic search for an element with distinct eigenvalues.

    Candidates are ``x + m*(i+1)`` in factor ``i`` for ``m = 0, 1, 2, ...``;
    the ``seed``-th candidate (counting from 0) that qualifies is returned.
    Within one factor the eigenvalues are distinct because the factor is
    squarefree, and two factors collide only for finitely many ``m``.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    hits = 0
    for m in range(GENERATOR_SEARCH_CAP):
        u = _shifted_generator(e, m)
        if has_distinct_eigenvalues(u):
            if hits == seed:
                return u
            hits += 1
    raise InvariantViolation("generator search exhausted; algebra is malformed",
                             cap=GENERATOR_SEARCH_CAP)
