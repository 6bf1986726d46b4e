"""Exit criteria, runnable from pytest and from ``twisted-m0n selftest``.

Every check is an exact equality; there are no tolerances to tune.  ``scale``
is ``"full"`` (the published sample sizes) or ``"small"`` (n in {5, 6, 7} and
20 trials per property).
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .brauer import (INF, QuaternionAlgebra, QuaternionOverFt, claim_check, h1_triviality_check,
                     is_division, local_hilbert, non_retract_witness, splits_over_quadratic,
                     tame_residue, verify_certificate)
from .errors import Degenerate, SquareParameter
from .etale import EtaleAlgebra, norm, trace_dual
from .exactnum import Poly
from .linal import annihilator, mul_subspaces, rank, span
from .numtheory import factorint, squarefree_part
from .parametrize import (Configuration, act, build_context, canonical, chart_coords, from_chart,
                          realize)
from .projective import distinct, normal_form
from .sampling import random_configuration, random_group_element, random_plane_in_z


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name}: {self.detail}"


def acceptance_algebras() -> dict[str, EtaleAlgebra]:
    """Odd-degree algebras used by the orbit, context and round-trip criteria."""
    return {
        "split Q^5": EtaleAlgebra.split(5),
        "split Q^7": EtaleAlgebra.split(7),
        "Q[x]/(x^5-2)": EtaleAlgebra((Poly([-2, 0, 0, 0, 0, 1]),)),
        "Q(sqrt2)xQ(sqrt3)xQ(cbrt2)": EtaleAlgebra(
            (Poly([-2, 0, 1]), Poly([-3, 0, 1]), Poly([-2, 0, 0, 1]))),
    }


def _split_points(cfg: Configuration):
    return list(zip(cfg.x.coords, cfg.y.coords))


def _try_canonical(ctx, cfg):
    try:
        return canonical(ctx, cfg)
    except Degenerate:
        return None


# -- 1 ------------------------------------------------------------------------

def split_completeness(scale: str = "full", seed: int = 0) -> CriterionResult:
    ns = (5, 7, 9) if scale == "full" else (5, 7)
    trials = 200 if scale == "full" else 20
    rng = random.Random(seed)
    start = time.perf_counter()
    mismatches, equal_pairs, redraws = 0, 0, 0
    for n in ns:
        e = EtaleAlgebra.split(n)
        ctx = build_context(e)

        def generic():
            nonlocal redraws
            while True:
                cfg = random_configuration(rng, e, 20)
                if distinct(_split_points(cfg)):
                    S = _try_canonical(ctx, cfg)
                    if S is not None:
                        return cfg, S
                redraws += 1

        for k in range(trials):
            cfg1, S1 = generic()
            kind = k % 3
            if kind == 0:
                cfg2 = act(random_group_element(rng, e), cfg1)
            elif kind == 1:
                xs, ys = list(cfg1.x.coords), list(cfg1.y.coords)
                i = rng.randrange(n)
                xs[i], ys[i] = Fraction(rng.randint(-20, 20)), Fraction(rng.randint(-20, 20))
                cfg2 = act(random_group_element(rng, e), Configuration.from_coords(e, xs, ys))
            else:
                cfg2, _ = generic()
            pts2 = _split_points(cfg2)
            S2 = _try_canonical(ctx, cfg2) if distinct(pts2) else None
            if S2 is None:
                cfg2 = act(random_group_element(rng, e), cfg1)
                pts2 = _split_points(cfg2)
                S2 = canonical(ctx, cfg2)
            same_oracle = normal_form(_split_points(cfg1)) == normal_form(pts2)
            same_canon = S1 == S2
            equal_pairs += same_oracle
            mismatches += same_oracle != same_canon
    elapsed = time.perf_counter() - start
    total = len(ns) * trials
    passed = mismatches == 0 and elapsed < 60
    return CriterionResult(1, "split-case completeness", passed,
                           f"n={list(ns)} pairs={total} equivalent={equal_pairs} "
                           f"mismatches={mismatches} redraws={redraws} time={elapsed:.1f}s")


# -- 2 ------------------------------------------------------------------------

def orbit_invariance(scale: str = "full", seed: int = 0) -> CriterionResult:
    draws = 100 if scale == "full" else 20
    rng = random.Random(seed + 1)
    parts, ok = [], True
    for name, e in acceptance_algebras().items():
        if scale == "small" and e.degree > 7:
            continue
        ctx = build_context(e)
        degenerate = failures = 0
        for _ in range(draws):
            cfg = random_configuration(rng, e, 20)
            g = random_group_element(rng, e)
            S = _try_canonical(ctx, cfg)
            if S is None:
                degenerate += 1
                continue
            if canonical(ctx, act(g, cfg)) != S:
                failures += 1
        good = failures == 0 and (draws - degenerate) >= 0.8 * draws
        ok &= good
        parts.append(f"{name}: {draws - degenerate}/{draws} nondegenerate, {failures} failures")
    return CriterionResult(2, "orbit invariance", ok, "; ".join(parts))


# -- 3 ------------------------------------------------------------------------

def context_verification(scale: str = "full", seed: int = 0) -> CriterionResult:
    algebras = dict(acceptance_algebras())
    if scale == "full":
        algebras["split Q^9"] = EtaleAlgebra.split(9)
        algebras["Q[x]/(x^7-3)"] = EtaleAlgebra((Poly([-3, 0, 0, 0, 0, 0, 0, 1]),))
    parts, ok = [], True
    for name, e in algebras.items():
        ctx = build_context(e, seed)
        s, n = ctx.s, e.degree
        pw = [e.one()]
        for _ in range(2 * s):
            pw.append(pw[-1] * ctx.a)
        r = rank([p.coords for p in pw])
        v0w = mul_subspaces(span([pw[0].coords, pw[s].coords]), ctx.W, e)
        dual = trace_dual(e, annihilator(v0w).basis[0])
        good = (r == 2 * s + 1 and v0w.dim == 2 * s and norm(dual) != 0
                and ctx.Z.dim == s + 1 and n == 2 * s + 1)
        ok &= good
        parts.append(f"{name}: rank={r} dim(V0W)={v0w.dim} dimZ={ctx.Z.dim}")
    return CriterionResult(3, "context verification", ok, "; ".join(parts))


# -- 4 ------------------------------------------------------------------------

def round_trip(scale: str = "full", seed: int = 0) -> CriterionResult:
    trials = 100 if scale == "full" else 20
    rng = random.Random(seed + 4)
    parts, ok = [], True
    for name, e in acceptance_algebras().items():
        ctx = build_context(e)
        done = skipped = bad = 0
        while done < trials:
            S = random_plane_in_z(rng, ctx)
            cfg = realize(ctx, S)
            T = _try_canonical(ctx, cfg)
            if T is None:
                skipped += 1
                continue
            done += 1
            piv, coords = chart_coords(ctx, S)
            back = from_chart(ctx, piv, coords)
            if T != S or back != S or chart_coords(ctx, back) != (piv, coords):
                bad += 1
        ok &= bad == 0
        parts.append(f"{name}: {done} ok-checked, {bad} bad, {skipped} outside U")
    return CriterionResult(4, "round trip", ok, "; ".join(parts))


# -- 5 ------------------------------------------------------------------------

def _places_of(*values):
    primes = {2}
    for q in values:
        q = Fraction(q)
        primes.update(factorint(q.numerator))
        primes.update(factorint(q.denominator) if q.denominator > 1 else {})
    return [INF] + sorted(primes)


def search_representation(a, b, d, bound: int = 10):
    """Integers ``(x, y, z, w)``, ``w > 0``, with ``a x^2 + b y^2 - ab z^2 = d w^2``."""
    a, b, d = Fraction(a), Fraction(b), Fraction(d)
    ab = a * b
    for w in range(1, bound + 1):
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                rest = a * x * x + b * y * y - d * w * w
                z2 = rest / ab
                if z2 < 0 or z2.denominator != 1:
                    continue
                z = math.isqrt(z2.numerator)
                if z * z == z2.numerator and z <= bound:
                    return x, y, z, w
    return None


def hilbert_soundness(scale: str = "full", seed: int = 0) -> CriterionResult:
    pairs = 200 if scale == "full" else 20
    target = 100 if scale == "full" else 20
    rng = random.Random(seed + 5)
    nz = [i for i in range(-100, 101) if i]
    product_failures = 0
    for _ in range(pairs):
        a = Fraction(rng.choice(nz), rng.randint(1, 100))
        b = Fraction(rng.choice(nz), rng.randint(1, 100))
        prod = 1
        for p in _places_of(a, b):
            prod *= local_hilbert(a, b, p)
        product_failures += prod != 1
    fixed = is_division(QuaternionAlgebra(-1, -1)) and not any(
        is_division(QuaternionAlgebra(1, b)) for b in (2, -1, 7, Fraction(-3, 5)))
    conclusive = disagreements = 0
    small = [i for i in range(-12, 13) if i]
    while conclusive < target:
        a, b, d = rng.choice(small), rng.choice(small), rng.choice(small)
        A = QuaternionAlgebra(a, b)
        found = search_representation(a, b, d)
        decided = splits_over_quadratic(A, d)
        if found is not None:
            conclusive += 1
            disagreements += not decided
    passed = product_failures == 0 and fixed and disagreements == 0
    return CriterionResult(5, "Hilbert-symbol soundness", passed,
                           f"product formula failures={product_failures}/{pairs}; fixed cases ok={fixed}; "
                           f"search-conclusive={conclusive} disagreements={disagreements}")


# -- 6 ------------------------------------------------------------------------

def obstruction_certificate(scale: str = "full", seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    ns = (6, 8) if scale == "full" else (6,)
    A = QuaternionAlgebra(-1, 3)
    ok, parts = True, []
    for n in ns:
        cert = non_retract_witness(n, A).to_json()
        independent = verify_certificate(cert)
        reps = all(search_representation(A.a, A.b, Fraction(d)) is not None for d in cert["params"])
        good = independent and reps and cert["facts"] == {"division": True, "split_by_E": True}
        ok &= good
        parts.append(f"n={n}: degree={EtaleAlgebra.from_json(cert['algebra']).degree} reverified={good}")
    try:
        non_retract_witness(6, QuaternionAlgebra(-1, -1))
        square_ok = False
    except SquareParameter:
        square_ok = True
    elapsed = time.perf_counter() - start
    ok &= square_ok and elapsed < 5
    parts.append(f"(-1,-1) -> SquareParameter: {square_ok}; time={elapsed:.2f}s")
    return CriterionResult(6, "obstruction certificate", ok, "; ".join(parts))


# -- 7 ------------------------------------------------------------------------

def _rand_poly(rng, deg, height=5):
    while True:
        p = Poly([rng.randint(-height, height) for _ in range(deg + 1)])
        if not p.is_zero():
            return p


def residue_calculus(scale: str = "full", seed: int = 0) -> CriterionResult:
    rng = random.Random(seed + 7)
    cases = 20
    places = [Poly([0, 1]), Poly([-1, 1]), Poly([2, 1]), Poly([1, 0, 1]), INF]
    const_ok = all(tame_residue(QuaternionOverFt.constant(QuaternionAlgebra(a, b)), pi).trivial
                   for a, b in [(-1, 3), (-1, -1), (2, 5), (Fraction(3, 7), -11)] for pi in places)
    r5 = tame_residue(QuaternionOverFt(Poly([0, 1]), Poly([5])), Poly([0, 1]))
    five_ok = r5.status == "nontrivial" and r5.square_class == 5

    square_failures = 0
    for _ in range(cases):
        f, g = _rand_poly(rng, rng.randint(0, 3)), _rand_poly(rng, rng.randint(0, 3))
        h = _rand_poly(rng, rng.randint(1, 2))
        A = QuaternionOverFt(f, g)
        B = QuaternionOverFt(f * h * h, g) if rng.random() < 0.5 else QuaternionOverFt(f, g * h * h)
        pts = [Poly([-Fraction(c), 1]) for c in range(-3, 4)] + [INF]
        for pi in pts:
            ra, rb = tame_residue(A, pi), tame_residue(B, pi)
            square_failures += (ra.status, ra.square_class) != (rb.status, rb.square_class)

    claims = 0
    for k in range(cases):
        c = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        if k < 3:
            b = (-1, 3, -3)[k]
        else:
            b = rng.choice([i for i in range(-30, 31) if i and squarefree_part(i) != 1])
        res = tame_residue(QuaternionOverFt(Poly([-c, 1]), Poly([b])), Poly([-c, 1]))
        claims += res.status == "nontrivial" and claim_check(res, -1, 3)
    passed = const_ok and five_ok and square_failures == 0 and claims == cases
    return CriterionResult(7, "residue calculus", passed,
                           f"constant trivial={const_ok}; (t,5) at t -> class {r5.square_class}; "
                           f"square-invariance failures={square_failures}; claim contradictions={claims}/{cases}")


# -- 8 ------------------------------------------------------------------------

def odd_degree_specialness(scale: str = "full", seed: int = 0) -> CriterionResult:
    algebras = {
        "split Q^5": EtaleAlgebra.split(5),
        "Q x Q(i) x Q(sqrt3)": EtaleAlgebra((Poly([0, 1]), Poly([1, 0, 1]), Poly([-3, 0, 1]))),
        "Q x Q(i) x Q(sqrt3) x Q(sqrt-3)": EtaleAlgebra(
            (Poly([0, 1]), Poly([1, 0, 1]), Poly([-3, 0, 1]), Poly([3, 0, 1]))),
    }
    samples = 20
    results = {name: h1_triviality_check(e, samples, seed) for name, e in algebras.items()}
    return CriterionResult(8, "odd-degree specialness", all(results.values()),
                           "; ".join(f"{k}: {v}" for k, v in results.items()) + f" ({samples} algebras each)")


CRITERIA: list[Callable[..., CriterionResult]] = [
    split_completeness, orbit_invariance, context_verification, round_trip,
    hilbert_soundness, obstruction_certificate, residue_calculus, odd_degree_specialness,
]


def run_all(scale: str = "full", seed: int = 0) -> list[CriterionResult]:
    return [c(scale, seed) for c in CRITERIA]
