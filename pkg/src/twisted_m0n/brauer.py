"""Quaternion algebras over Q and Q(t), local symbols and residues.

Places of Q are odd or even primes (``int``) or the real place :data:`INF`.
Over Q(t), finite places are monic squarefree polynomials ``pi`` and
:data:`INF` is the place with uniformizer ``1/t``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import (InvariantViolation, NotDivision, NotPrime, NotSplitByE, Ramified,
                     SquareParameter, UnsupportedFactorDegree, ValidationError, ZeroEntry)
from .etale import EtaleAlgebra
from .exactnum import Poly, is_squarefree, poly_xgcd, rat, rat_str
from .numtheory import (check_height, factorint, integer_class, is_prime, is_rational_square,
                        rational_roots, squarefree_part, valuation)

INF = "inf"
Place = Union[int, str]


@dataclass(frozen=True)
class QuaternionAlgebra:
    """The symbol algebra ``(a, b)``: ``i^2 = a, j^2 = b, ij = -ji``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = rat(self.a), rat(self.b)
        if a == 0 or b == 0:
            raise ValidationError("quaternion parameters must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_json(cls, data: dict) -> "QuaternionAlgebra":
        return cls(rat(data["a"]), rat(data["b"]))

    def to_json(self) -> dict:
        return {"a": rat_str(self.a), "b": rat_str(self.b)}


@dataclass(frozen=True)
class QuaternionOverFt:
    """The symbol algebra ``(f(t), g(t))`` over Q(t)."""

    f: Poly
    g: Poly

    def __post_init__(self):
        f = self.f if isinstance(self.f, Poly) else Poly(self.f)
        g = self.g if isinstance(self.g, Poly) else Poly(self.g)
        if f.is_zero() or g.is_zero():
            raise ValidationError("symbol entries must be nonzero")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)

    @classmethod
    def constant(cls, A: QuaternionAlgebra) -> "QuaternionOverFt":
        return cls(Poly.const(A.a), Poly.const(A.b))

    @classmethod
    def from_json(cls, data: dict) -> "QuaternionOverFt":
        return cls(Poly.from_json(data["f"]), Poly.from_json(data["g"]))

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json()}


@dataclass(frozen=True)
class ResidueClass:
    """Residue of a symbol at a place, as a square class of the residue field.

    ``status`` is ``"trivial"``, ``"nontrivial"`` or, at places of degree > 1
    where squareness is not decided, ``"undecided"``.  For rational places
    ``square_class`` is the signed squarefree integer representative.
    """

    place: Union[Poly, str]
    representative: Union[Fraction, Poly]
    status: str
    square_class: int | None = None

    @property
    def trivial(self) -> bool:
        return self.status == "trivial"

    @property
    def rational(self) -> bool:
        return self.place == INF or self.place.degree == 1

    def place_label(self) -> str:
        if self.place == INF:
            return INF
        if self.place.degree == 1:
            return f"t={rat_str(-self.place.coeffs[0])}"
        return repr(self.place)

    def to_json(self) -> dict:
        out = {
            "place": INF if self.place == INF else self.place.to_json(),
            "status": self.status,
        }
        if isinstance(self.representative, Poly):
            out["representative"] = self.representative.to_json()
        else:
            out["representative"] = rat_str(self.representative)
        if self.square_class is not None:
            out["square_class"] = self.square_class
        return out


# -- local symbols ------------------------------------------------------------

def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def local_hilbert(a, b, p: Place) -> int:
    """Hilbert symbol ``(a, b)_p`` in {+1, -1}."""
    a, b = rat(a), rat(b)
    if a == 0 or b == 0:
        raise ValidationError("Hilbert symbol of zero")
    if p == INF:
        return -1 if (a < 0 and b < 0) else 1
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime("place is neither a prime nor inf", place=p)
    alpha, u = valuation(integer_class(a), p)
    beta, v = valuation(integer_class(b), p)
    if p == 2:
        eps = lambda z: ((z - 1) // 2) % 2
        omega = lambda z: ((z * z - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha


def relevant_places(*values) -> list[Place]:
    """inf, 2 and the odd primes dividing the squarefree parts of ``values``."""
    primes = {2}
    for q in values:
        check_height(q)
        primes.update(p for p in factorint(squarefree_part(q)))
    return [INF] + sorted(primes)


def local_symbols(A: QuaternionAlgebra) -> dict[Place, int]:
    return {p: local_hilbert(A.a, A.b, p) for p in relevant_places(A.a, A.b)}


def ramified_places(A: QuaternionAlgebra) -> list[Place]:
    syms = local_symbols(A)
    ram = [p for p, s in syms.items() if s == -1]
    if len(ram) % 2:
        raise InvariantViolation("product formula fails", a=A.a, b=A.b)
    return ram


def is_division(A: QuaternionAlgebra) -> bool:
    return bool(ramified_places(A))


def is_local_square(q, p: Place) -> bool:
    """Whether the nonzero rational ``q`` is a square in Q_p (or R)."""
    q = rat(q)
    if p == INF:
        return q > 0
    alpha, u = valuation(integer_class(q), p)
    if alpha % 2:
        return False
    if p == 2:
        return u % 8 == 1
    return _legendre(u, p) == 1


def _isotropic_at(coeffs: list[Fraction], p: Place) -> bool:
    # rank-4 form: anisotropic iff disc is a square and Hasse invariant = -(-1,-1)
    if p == INF:
        return any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs)
    disc = Fraction(1)
    for c in coeffs:
        disc *= c
    if not is_local_square(disc, p):
        return True
    hasse = 1
    for i in range(4):
        for j in range(i + 1, 4):
            hasse *= local_hilbert(coeffs[i], coeffs[j], p)
    return hasse == local_hilbert(-1, -1, p)


def splits_over_quadratic(A: QuaternionAlgebra, d) -> bool:
    """Whether ``A`` is split by the quadratic étale algebra ``Q[x]/(x^2 - d)``.

    For non-square ``d`` this holds iff the pure-quaternion form
    ``<a, b, -ab>`` represents ``d``, i.e. ``<a, b, -ab, -d>`` is isotropic;
    isotropy over Q is decided place by place.  For square ``d`` the algebra
    is ``Q x Q`` and the answer is whether ``A`` itself is split.
    """
    d = rat(d)
    if d == 0:
        raise ValidationError("d must be nonzero")
    if is_rational_square(d):
        return not is_division(A)
    coeffs = [A.a, A.b, -A.a * A.b, -d]
    return all(_isotropic_at(coeffs, p) for p in relevant_places(2, d, A.a, A.b))


def splits_by_ramification(A: QuaternionAlgebra, d) -> bool:
    """Independent criterion: ``A`` splits over ``Q(sqrt d)`` iff ``d`` is not a
    local square at any place where ``A`` ramifies."""
    d = rat(d)
    return all(not is_local_square(d, p) for p in ramified_places(A))


def _quadratic_discriminant(p: Poly) -> Fraction:
    gamma, beta, _ = p.coeffs
    return beta * beta - 4 * gamma


def etale_splits_quaternion(A: QuaternionAlgebra, E: EtaleAlgebra) -> bool:
    """Whether ``A ⊗ E`` is split, for ``E`` with factors of degree <= 2."""
    for i, p in enumerate(E.factors):
        if p.degree > 2:
            raise UnsupportedFactorDegree("factor degree above 2", factor=i, degree=p.degree)
    for p in E.factors:
        if p.degree == 1:
            if is_division(A):
                return False
        elif not splits_over_quadratic(A, _quadratic_discriminant(p)):
            return False
    return True


# -- the obstruction certificate ---------------------------------------------

@dataclass
class ObstructionCertificate:
    n: int
    A: QuaternionAlgebra
    params: tuple[Fraction, Fraction, Fraction]
    multiplicities: tuple[int, int, int]
    algebra: EtaleAlgebra
    symbols: dict
    division: bool
    split_by_E: bool
    transcript: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "quaternion": self.A.to_json(),
            "params": [rat_str(a) for a in self.params],
            "multiplicities": list(self.multiplicities),
            "algebra": self.algebra.to_json(),
            "local_symbols": {str(p): s for p, s in self.symbols.items()},
            "facts": {"division": self.division, "split_by_E": self.split_by_E},
            "transcript": self.transcript,
            "conclusion": "twisted form attached to E is not retract rational"
            if self.division and self.split_by_E else "no conclusion",
        }


def non_retract_witness(n: int, A: QuaternionAlgebra) -> ObstructionCertificate:
    """Étale algebra ``E1^(n/2-2) x E2 x E3`` with ``Ei = Q(sqrt a_i)``,
    ``a3 = a1 a2``, whose twisted form is not retract rational.

    The argument needs ``A`` to be split by ``E``.  ``Q(sqrt a1)`` and
    ``Q(sqrt a2)`` always split ``A``, but ``Q(sqrt a1 a2)`` may not, and
    then :class:`NotSplitByE` is raised instead of a certificate.
    """
    if n % 2 or n < 6:
        raise ValidationError("n must be even and at least 6", n=n)
    symbols = local_symbols(A)
    transcript = [{"step": "local_symbols", "values": {str(p): s for p, s in symbols.items()}}]
    if not is_division(A):
        raise NotDivision("quaternion algebra is split", a=rat_str(A.a), b=rat_str(A.b))
    transcript.append({"step": "division", "ramified": [str(p) for p in ramified_places(A)]})
    params = (A.a, A.b, A.a * A.b)
    for i, ai in enumerate(params, start=1):
        if is_rational_square(ai):
            raise SquareParameter(f"a{i} is a square", index=i, value=rat_str(ai))
    mult = (n // 2 - 2, 1, 1)
    factors = []
    for ai, k in zip(params, mult):
        factors.extend([Poly([-ai, 0, 1])] * k)
    E = EtaleAlgebra(tuple(factors))
    per_field = []
    for i, ai in enumerate(params, start=1):
        per_field.append({"field": i, "d": rat_str(ai), "split": splits_over_quadratic(A, ai)})
    transcript.append({"step": "split_by_quadratics", "results": per_field})
    split = etale_splits_quaternion(A, E)
    transcript.append({"step": "split_by_E", "value": split})
    if not split:
        # Q(sqrt(a1 a2)) need not embed in A: (-3, -2) ramifies at inf but Q(sqrt 6) is real
        bad = [r["field"] for r in per_field if not r["split"]]
        raise NotSplitByE("A is not split by E", fields=",".join(map(str, bad)))
    return ObstructionCertificate(n, A, params, mult, E, symbols, True, split, transcript)


def verify_certificate(data: dict) -> bool:
    """Re-check a serialized certificate without reusing the quaternary-form test."""
    A = QuaternionAlgebra.from_json(data["quaternion"])
    E = EtaleAlgebra.from_json(data["algebra"])
    if E.degree != data["n"]:
        return False
    ram = [p for p in relevant_places(A.a, A.b) if local_hilbert(A.a, A.b, p) == -1]
    division = bool(ram)
    split = True
    for p in E.factors:
        if p.degree != 2:
            split = split and not division
            continue
        d = _quadratic_discriminant(p)
        split = split and all(not is_local_square(d, v) for v in ram)
    return division == data["facts"]["division"] and split == data["facts"]["split_by_E"] \
        and division and split


# -- residues over Q(t) --------------------------------------------------------

def _poly_valuation(f: Poly, pi: Poly) -> tuple[int, Poly]:
    v = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return v, f
        f, v = q, v + 1


def _check_place(pi) -> None:
    if pi == INF:
        return
    if not isinstance(pi, Poly) or pi.degree < 1 or pi.lc != 1 or not is_squarefree(pi):
        raise ValidationError("place must be inf or a monic squarefree polynomial")


def tame_residue(A: QuaternionOverFt, pi) -> ResidueClass:
    """Tame symbol ``(-1)^(v(f)v(g)) f^v(g) / g^v(f)`` reduced at the place."""
    _check_place(pi)
    f, g = A.f, A.g
    if pi == INF:
        vf, vg = -f.degree, -g.degree
        u = (-1) ** (vf * vg) * f.lc ** vg / g.lc ** vf
        return _rational_residue(INF, u)
    vf, f0 = _poly_valuation(f, pi)
    vg, g0 = _poly_valuation(g, pi)
    sign = -1 if (vf * vg) % 2 else 1
    if pi.degree == 1:
        t0 = -pi.coeffs[0]
        u = sign * f0(t0) ** vg / g0(t0) ** vf
        return _rational_residue(pi, u)
    num = (f0 ** vg) % pi
    den = (g0 ** vf) % pi
    d, inv, _ = poly_xgcd(den, pi)
    if d.degree != 0:
        raise ValidationError("place is not coprime to the reduced entries")
    rep = (num * inv * sign) % pi
    if rep == Poly([1]):
        return ResidueClass(pi, rep, "trivial")
    return ResidueClass(pi, rep, "undecided")


def _rational_residue(place, u: Fraction) -> ResidueClass:
    cls = squarefree_part(u)
    return ResidueClass(place, u, "trivial" if cls == 1 else "nontrivial", cls)


def specialize(A: QuaternionOverFt, t0) -> QuaternionAlgebra:
    t0 = rat(t0)
    res = tame_residue(A, Poly([-t0, 1]))
    if not res.trivial:
        raise Ramified("symbol is ramified at this point", t0=rat_str(t0))
    fv, gv = A.f(t0), A.g(t0)
    if fv == 0 or gv == 0:
        raise ZeroEntry("an entry vanishes at this point", t0=rat_str(t0))
    return QuaternionAlgebra(fv, gv)


def residue_places(A: QuaternionOverFt, extra: Iterable = (0, 1)) -> list:
    """Rational places where a residue may live, plus ``extra`` points and inf."""
    pts = set(rat(x) for x in extra)
    pts.update(rational_roots(list(A.f.coeffs)))
    pts.update(rational_roots(list(A.g.coeffs)))
    return [Poly([-p, 1]) for p in sorted(pts)] + [INF]


def residue_table(A: QuaternionOverFt, extra: Iterable = (0, 1)) -> dict:
    """Residues at all rational candidate places.  Irrational zeros of ``f g``
    are reported as a leftover factor with undecided status."""
    rows = [tame_residue(A, pi) for pi in residue_places(A, extra)]
    left = A.f * A.g
    for r in rows:
        if r.place != INF:
            while (left % r.place).is_zero():
                left = left // r.place
    out = {"residues": [dict(r.to_json(), label=r.place_label()) for r in rows]}
    if left.degree >= 1:
        out["undecided_places"] = left.monic().to_json()
    return out


def claim_check(residue: ResidueClass, a1, a2) -> bool:
    """Replay the argument that a nontrivial residue is incompatible with a
    symbol split by all of ``Q(sqrt a1), Q(sqrt a2), Q(sqrt a1 a2)``.

    Splitting by ``Q(sqrt a_i)`` would force ``(b) = (a_i)`` for each ``i``;
    summing the three gives ``(b) = (a1 a2 a3) = 0``.  Returns True when a
    contradiction is reached (always the case for a nontrivial residue),
    False for a trivial one.
    """
    if not residue.rational:
        raise ValidationError("residue field is not Q")
    if residue.trivial:
        return False
    b = residue.square_class
    a1, a2 = rat(a1), rat(a2)
    params = (a1, a2, a1 * a2)
    matches = [squarefree_part(ai) == b for ai in params]
    if not all(matches):
        return True
    forced = squarefree_part(params[0] * params[1] * params[2])
    return forced != b


def sample_division_algebras(count: int, seed: int = 0, height: int = 50) -> list[QuaternionAlgebra]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = rng.choice([i for i in range(-height, height + 1) if i])
        b = rng.choice([i for i in range(-height, height + 1) if i])
        A = QuaternionAlgebra(a, b)
        if is_division(A):
            out.append(A)
    return out


def h1_triviality_check(E: EtaleAlgebra, samples: int = 20, seed: int = 0) -> bool:
    """For odd-degree ``E`` with factors of degree <= 2, check that no sampled
    division algebra is split by ``E``."""
    for i, p in enumerate(E.factors):
        if p.degree > 2:
            raise UnsupportedFactorDegree("factor degree above 2", factor=i, degree=p.degree)
    if E.degree % 2 == 0:
        raise ValidationError("total degree must be odd", degree=E.degree)
    return all(not etale_splits_quaternion(A, E) for A in sample_division_algebras(samples, seed))
