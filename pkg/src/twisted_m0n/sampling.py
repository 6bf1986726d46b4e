"""Seeded random draws used by the self-test, the CLI and the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from .etale import AlgElement, EtaleAlgebra, norm
from .linal import Subspace, span
from .parametrize import Configuration, ParamContext, TwistedGroupElement


def random_element(rng: random.Random, e: EtaleAlgebra, height: int) -> AlgElement:
    return e.element([rng.randint(-height, height) for _ in range(e.degree)])


def random_unit(rng: random.Random, e: EtaleAlgebra, height: int = 5) -> AlgElement:
    while True:
        t = random_element(rng, e, height)
        if norm(t) != 0:
            return t


def random_group_element(rng: random.Random, e: EtaleAlgebra, height: int = 5) -> TwistedGroupElement:
    while True:
        g = [[rng.randint(-height, height) for _ in range(2)] for _ in range(2)]
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0:
            return TwistedGroupElement(g, random_unit(rng, e, height))


def random_configuration(rng: random.Random, e: EtaleAlgebra, height: int = 20) -> Configuration:
    while True:
        x, y = random_element(rng, e, height), random_element(rng, e, height)
        cfg = Configuration(e, x, y)
        if cfg.plane().dim == 2:
            return cfg


def random_plane_in_z(rng: random.Random, ctx: ParamContext, height: int = 10) -> Subspace:
    width, n = ctx.Z.dim, ctx.algebra.degree
    while True:
        m = [[rng.randint(-height, height) for _ in range(width)] for _ in range(2)]
        vecs = [[sum((Fraction(row[k]) * ctx.Z.basis[k][j] for k in range(width)), Fraction(0))
                 for j in range(n)] for row in m]
        S = span(vecs, ambient_dim=n)
        if S.dim == 2:
            return S
