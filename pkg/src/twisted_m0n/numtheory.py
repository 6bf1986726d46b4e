"""Integer factorization and square classes of rationals."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import HeightExceeded
from .exactnum import rat

HEIGHT_CAP = 10**12

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with these bases."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in range(2, 1000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return tuple(sorted(out.items()))


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` (n != 0)."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return dict(_factor_cached(abs(n)))


def check_height(q: Fraction, cap: int = HEIGHT_CAP) -> None:
    q = rat(q)
    if abs(q.numerator) > cap or q.denominator > cap:
        raise HeightExceeded("rational exceeds the factorization height cap", value=str(q))


def integer_class(q) -> int:
    """An integer in the same square class as the nonzero rational ``q``."""
    q = rat(q)
    if q == 0:
        raise ValueError("zero has no square class")
    return q.numerator * q.denominator


def squarefree_part(q) -> int:
    """Signed squarefree integer representing ``q`` modulo squares."""
    n = integer_class(q)
    out = -1 if n < 0 else 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return out


def is_rational_square(q) -> bool:
    q = rat(q)
    if q < 0:
        return False
    return all(math.isqrt(v) ** 2 == v for v in (q.numerator, q.denominator))


def valuation(n: int, p: int) -> tuple[int, int]:
    """``(v, u)`` with ``n = p^v u`` and ``p`` not dividing ``u``."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """Distinct rational roots of the polynomial with these coefficients
    (constant term first), via the rational root test."""
    cs = [rat(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = set()
    if cs[0] == 0:
        roots.add(Fraction(0))
        k = next(i for i, c in enumerate(cs) if c != 0)
        cs = cs[k:]
    den = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    if len(ints) > 1:
        a0, an = ints[0], ints[-1]
        def divisors(m):
            ds = [1]
            for p, e in factorint(m).items():
                ds = [d * p**k for d in ds for k in range(e + 1)]
            return ds
        for p in divisors(a0):
            for q in divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    acc = Fraction(0)
                    for c in reversed(ints):
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)
