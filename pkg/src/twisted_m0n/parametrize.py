"""Explicit rational parametrization of twisted forms of M_{0,n}, n odd.

A twisted configuration is a pair ``(x, y)`` of elements of an étale algebra
``E`` of odd degree ``n = 2s + 1``; the group ``(GL_2 x E^*)/Q^*`` acts by
mixing ``x, y`` linearly and multiplying both by a unit.  Orbits of generic
configurations are in bijection with 2-planes inside the fixed subspace
``Z = {b : b W ⊆ H}``, where ``W = span(1, a, ..., a^(s-1))`` and ``H`` is a
hyperplane in the dense torus orbit.  :func:`canonical` computes that plane;
:func:`chart_coords` gives ``n - 3`` affine coordinates on it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (ContextDegenerate, DegreeTooSmall, EvenDegree, InvariantViolation,
                     MalformedChart, NotAUnit, NotInDenseOrbit, NotInGeneralPosition, NotInZ,
                     ValidationError)
from .etale import AlgElement, EtaleAlgebra, find_generator, inverse, norm, trace_dual
from .exactnum import rat, rat_str
from .linal import (Hyperplane, Subspace, annihilator, contains, kernel, mul_subspaces, rank,
                    rref_pivots, span)


@dataclass(frozen=True)
class Configuration:
    parent: EtaleAlgebra
    x: AlgElement
    y: AlgElement

    @classmethod
    def from_coords(cls, e: EtaleAlgebra, x: Sequence, y: Sequence) -> "Configuration":
        return cls(e, e.element(x), e.element(y))

    @classmethod
    def from_json(cls, e: EtaleAlgebra, data: dict) -> "Configuration":
        return cls.from_coords(e, [rat(c) for c in data["x"]], [rat(c) for c in data["y"]])

    def to_json(self) -> dict:
        return {"x": [rat_str(c) for c in self.x.coords], "y": [rat_str(c) for c in self.y.coords]}

    def plane(self) -> Subspace:
        return span([self.x.coords, self.y.coords], ambient_dim=self.parent.degree)


@dataclass(frozen=True)
class TwistedGroupElement:
    """``(g, t)`` in ``(GL_2 x E^*)/Q^*``; ``(c g, t / c)`` acts the same way."""

    g: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    t: AlgElement

    def __post_init__(self):
        g = tuple(tuple(rat(v) for v in row) for row in self.g)
        if len(g) != 2 or any(len(r) != 2 for r in g):
            raise ValidationError("g must be 2x2")
        object.__setattr__(self, "g", g)
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
            raise ValidationError("singular matrix g")
        if norm(self.t) == 0:
            raise NotAUnit("t is not a unit")


def act(e: TwistedGroupElement, cfg: Configuration) -> Configuration:
    if e.t.parent != cfg.parent:
        raise ValidationError("group element and configuration live over different algebras")
    (g11, g12), (g21, g22) = e.g
    x = e.t * (cfg.x * g11 + cfg.y * g12)
    y = e.t * (cfg.x * g21 + cfg.y * g22)
    return Configuration(cfg.parent, x, y)


@dataclass(frozen=True)
class ParamContext:
    algebra: EtaleAlgebra
    s: int
    a: AlgElement
    W: Subspace
    c_H: AlgElement
    H: Hyperplane
    Z: Subspace
    seed: int = 0
    checks: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def zbasis(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.Z.basis

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.to_json(),
            "seed": self.seed,
            "s": self.s,
            "a": [rat_str(c) for c in self.a.coords],
            "c_H": [rat_str(c) for c in self.c_H.coords],
            "W": self.W.to_json(),
            "Z": self.Z.to_json(),
            "checks": self.checks,
        }


def _powers(a: AlgElement, k: int) -> list[AlgElement]:
    out = [a.parent.one()]
    for _ in range(1, k):
        out.append(out[-1] * a)
    return out


def _z_space(e: EtaleAlgebra, W: Subspace, c_H: AlgElement) -> Subspace:
    # b in Z iff trace(c_H * w_j * b) = 0 for every basis vector w_j of W
    conds = []
    for w in W.basis:
        cw = c_H * e.element(w)
        conds.append([e.trace(cw * b) for b in e.basis()])
    return kernel(conds, ncols=e.degree)


def build_context(e: EtaleAlgebra, seed: int = 0, c_H: AlgElement | None = None) -> ParamContext:
    n = e.degree
    if n % 2 == 0:
        raise EvenDegree("even degree: no parametrization; see the brauer module", degree=n)
    if n < 5:
        raise DegreeTooSmall("degree must be at least 5", degree=n)
    s = (n - 1) // 2
    a = find_generator(e, seed)
    pw = _powers(a, 2 * s + 1)

    vander_rank = rank([p.coords for p in pw])
    if vander_rank != 2 * s + 1:
        raise ContextDegenerate("1, a, ..., a^2s are dependent", rank=vander_rank)
    W = span([p.coords for p in pw[:s]], ambient_dim=n)

    if c_H is None:
        c_H = e.one()
    if norm(c_H) == 0:
        raise ContextDegenerate("c_H must be a unit")
    H = Hyperplane(c_H)
    Z = _z_space(e, W, c_H)
    if Z.dim != s + 1:
        raise ContextDegenerate("dim Z != s + 1", dim=Z.dim)

    v0 = span([pw[0].coords, pw[s].coords], ambient_dim=n)
    v0w = mul_subspaces(v0, W, e)
    if v0w.dim != 2 * s or v0w != span([p.coords for p in pw[:2 * s]], ambient_dim=n):
        raise ContextDegenerate("witness span(1, a^s) fails", dim=v0w.dim)
    c_v0 = trace_dual(e, annihilator(v0w).basis[0])
    witness_norm = norm(c_v0)
    if witness_norm == 0:
        raise ContextDegenerate("witness hyperplane outside the dense orbit")

    checks = {
        "vandermonde_rank": vander_rank,
        "dim_W": W.dim,
        "dim_witness_product": v0w.dim,
        "witness_dual_norm": rat_str(witness_norm),
        "dim_Z": Z.dim,
    }
    return ParamContext(e, s, a, W, c_H, H, Z, seed, checks)


def context_from_json(data: dict) -> ParamContext:
    """Rebuild a context and check it against the serialized W and Z."""
    e = EtaleAlgebra.from_json(data["algebra"])
    seed = int(data.get("seed", 0))
    c_H = e.element([rat(c) for c in data["c_H"]]) if "c_H" in data else None
    ctx = build_context(e, seed, c_H)
    if "a" in data and ctx.a != e.element([rat(c) for c in data["a"]]):
        raise ValidationError("stored generator does not match the rebuilt context")
    if "Z" in data and ctx.Z != span([[rat(c) for c in r] for r in data["Z"]], ambient_dim=e.degree):
        raise ValidationError("stored Z does not match the rebuilt context")
    return ctx


def f_W(ctx: ParamContext, V: Subspace) -> Hyperplane:
    """The hyperplane ``V * W`` (general position means ``dim = 2s``)."""
    if V.dim != 2:
        raise NotInGeneralPosition("V is not a plane", dim=V.dim)
    e = ctx.algebra
    vw = mul_subspaces(V, ctx.W, e)
    if vw.dim != 2 * ctx.s:
        raise NotInGeneralPosition("dim(V*W) < 2s", dim=vw.dim)
    return Hyperplane(trace_dual(e, annihilator(vw).basis[0]))


def canonical(ctx: ParamContext, cfg: Configuration) -> Subspace:
    """Canonical representative ``tV ⊆ Z`` of the orbit of ``cfg``."""
    V = cfg.plane()
    hyp = f_W(ctx, V)
    c_V = hyp.dual
    if norm(c_V) == 0:
        raise NotInDenseOrbit("dual of V*W is not a unit")
    t = c_V * inverse(ctx.c_H)
    e = ctx.algebra
    S = span([(t * e.element(row)).coords for row in V.basis], ambient_dim=e.degree)
    if not contains(ctx.Z, S) or f_W(ctx, S) != ctx.H:
        raise InvariantViolation("canonical plane misses the section")
    return S


def _chart_free_columns(pivots: tuple[int, int], width: int) -> list[list[int]]:
    return [[c for c in range(p + 1, width) if c not in pivots] for p in pivots]


def chart_coords(ctx: ParamContext, S: Subspace) -> tuple[tuple[int, int], tuple[Fraction, ...]]:
    """Pivot pair (1-based) and the free RREF entries of ``S`` in the Z basis."""
    if S.dim != 2:
        raise ValidationError("chart needs a plane", dim=S.dim)
    if not contains(ctx.Z, S):
        raise NotInZ("plane is not contained in Z")
    m = [ctx.Z.coordinates(row) for row in S.basis]
    red, piv = rref_pivots(m)
    width = ctx.Z.dim
    coords = tuple(red[r][c] for r, cols in enumerate(_chart_free_columns(piv, width)) for c in cols)
    return (piv[0] + 1, piv[1] + 1), coords


def from_chart(ctx: ParamContext, pivots: Sequence[int], coords: Sequence) -> Subspace:
    width = ctx.Z.dim
    if len(pivots) != 2 or not (1 <= pivots[0] < pivots[1] <= width):
        raise MalformedChart("bad pivot profile", pivots=list(pivots))
    piv = (pivots[0] - 1, pivots[1] - 1)
    free = _chart_free_columns(piv, width)
    if len(coords) != sum(len(f) for f in free):
        raise MalformedChart("wrong number of chart coordinates", got=len(coords))
    vals = iter(rat(c) for c in coords)
    m = []
    for r, p in enumerate(piv):
        row = [Fraction(0)] * width
        row[p] = Fraction(1)
        for c in free[r]:
            row[c] = next(vals)
        m.append(row)
    zb = ctx.Z.basis
    n = ctx.algebra.degree
    vecs = [[sum((row[k] * zb[k][j] for k in range(width)), Fraction(0)) for j in range(n)]
            for row in m]
    return span(vecs, ambient_dim=n)


def realize(ctx: ParamContext, S: Subspace) -> Configuration:
    if S.dim != 2:
        raise ValidationError("realize needs a plane", dim=S.dim)
    if not contains(ctx.Z, S):
        raise NotInZ("plane is not contained in Z")
    e = ctx.algebra
    return Configuration(e, e.element(S.basis[0]), e.element(S.basis[1]))


def plucker(S: Subspace) -> tuple[Fraction, ...]:
    """Plücker vector of a plane (2x2 minors, lexicographic), first nonzero = 1."""
    if S.dim != 2:
        raise ValidationError("Plücker coordinates need a plane")
    r0, r1 = S.basis
    n = S.ambient_dim
    minors = [r0[i] * r1[j] - r0[j] * r1[i] for i in range(n) for j in range(i + 1, n)]
    lead = next(m for m in minors if m != 0)
    return tuple(m / lead for m in minors)
