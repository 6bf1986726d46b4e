"""Points on P^1(Q) and the cross-ratio normal form of ordered configurations.

This is deliberately separate from the étale-algebra pipeline: it uses only
homogeneous coordinates ``[x : y]`` and 2x2 determinants, so it can serve as
an independent check of :func:`twisted_m0n.parametrize.canonical` for split
algebras.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Point = tuple[Fraction, Fraction]
INFINITY = None


def _det(p: Point, q: Point) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def affine(p: Point) -> Optional[Fraction]:
    """``x / y``, or ``None`` for the point at infinity."""
    if p[1] == 0:
        return INFINITY
    return Fraction(p[0]) / p[1]


def distinct(points: Sequence[Point]) -> bool:
    if any(p[0] == 0 and p[1] == 0 for p in points):
        return False
    return all(_det(points[i], points[j]) != 0
               for i in range(len(points)) for j in range(i + 1, len(points)))


def normal_form(points: Sequence[Point]) -> tuple[Optional[Fraction], ...]:
    """Images of points 4..n under the Möbius map sending points 1, 2, 3 to
    0, 1, infinity.  Requires pairwise distinct points."""
    if len(points) < 3 or not distinct(points):
        raise ValueError("need at least three pairwise distinct points")
    p1, p2, p3 = points[:3]
    k = _det(p2, p3)
    l = _det(p2, p1)
    out = []
    for p in points[3:]:
        out.append(affine((_det(p, p1) * k, _det(p, p3) * l)))
    return tuple(out)


def mobius(m: Sequence[Sequence], p: Point) -> Point:
    (a, b), (c, d) = m
    return (a * p[0] + b * p[1], c * p[0] + d * p[1])
