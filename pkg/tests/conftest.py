from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from twisted_m0n.etale import EtaleAlgebra
from twisted_m0n.exactnum import Poly

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def bareiss_det(m):
    """Fraction-free determinant, kept separate from the library's elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester(f: Poly, g: Poly):
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(f.coeffs)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(g.coeffs)) + [0] * (size - n - 1 - i))
    return rows


def polys(max_degree=6, height=10, nonzero=True):
    return st.lists(st.integers(-height, height), min_size=1, max_size=max_degree + 1) \
        .map(Poly).filter(lambda p: not nonzero or not p.is_zero())


SPLIT5 = EtaleAlgebra.split(5)
X5M2 = EtaleAlgebra((Poly([-2, 0, 0, 0, 0, 1]),))
MIXED7 = EtaleAlgebra((Poly([-2, 0, 1]), Poly([-3, 0, 1]), Poly([-2, 0, 0, 1])))
GAUSS_X_Q = EtaleAlgebra((Poly([1, 0, 1]), Poly([-1, 1])))
DEG9 = EtaleAlgebra((Poly([-5, 0, 1]), Poly([1, 1, 1]), Poly([-2, 0, 0, 0, 1]), Poly([3, 1])))

TEST_ALGEBRAS = {
    "split5": SPLIT5,
    "x5m2": X5M2,
    "mixed7": MIXED7,
    "gauss_x_q": GAUSS_X_Q,
    "deg9": DEG9,
    "split7": EtaleAlgebra.split(7),
}


@pytest.fixture(params=sorted(TEST_ALGEBRAS))
def algebra(request):
    return TEST_ALGEBRAS[request.param]
