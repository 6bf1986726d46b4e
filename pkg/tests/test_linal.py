import random
from fractions import Fraction
from itertools import permutations

from hypothesis import given, strategies as st

from twisted_m0n.etale import EtaleAlgebra, find_generator
from twisted_m0n.linal import (Hyperplane, annihilator, contains, det, intersect, kernel, member,
                               mul_subspaces, rank, rref, span)

from conftest import bareiss_det

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def test_vandermonde():
    v = [[k ** j for j in range(5)] for k in range(5)]
    assert leibniz_det(v) == 288
    assert det(v) == 288
    assert rank(v) == 5


def test_powers_of_generator_have_full_rank():
    e = EtaleAlgebra.split(6)
    a = find_generator(e)
    rows, cur = [], e.one()
    for _ in range(4):
        rows.append(list(cur.coords))
        cur = cur * a
    # some 4x4 minor is nonzero
    assert any(leibniz_det([[r[c] for c in cols] for r in rows]) != 0
               for cols in [(0, 1, 2, 3), (0, 1, 2, 4), (1, 2, 3, 4)])
    assert rank(rows) == 4


def test_kernel_of_zero_matrix():
    k = kernel([[0, 0, 0]], ncols=3)
    assert k.dim == 3


def test_span_member_intersect():
    s1 = span([[1, 0, 0, 0], [0, 1, 0, 0]])
    s2 = span([[0, 1, 0, 0], [0, 0, 1, 0]])
    assert member([3, 5, 0, 0], s1)
    assert not member([0, 0, 1, 0], s1)
    i = intersect(s1, s2)
    assert i.dim == 1 and member([0, 1, 0, 0], i)
    assert contains(s1, i) and not contains(s1, s2)
    assert annihilator(s1).dim == 2


def test_mul_subspaces_example():
    e = EtaleAlgebra.split(5)
    a = e.element([0, 1, 2, 3, 4])
    V = span([e.one().coords, (a * a).coords])
    W = span([e.one().coords, a.coords])
    assert mul_subspaces(V, W, e).dim == 4


def test_hyperplane_normalization():
    h1 = Hyperplane(EtaleAlgebra.split(3).element([0, 2, 4]))
    h2 = Hyperplane(EtaleAlgebra.split(3).element([0, -1, -2]))
    assert h1 == h2 and h1.dual.coords == (0, 1, 2)


@given(matrices)
def test_det_matches_bareiss(m):
    k = min(len(m), len(m[0]))
    sq = [row[:k] for row in m[:k]]
    assert det(sq) == bareiss_det(sq)


@given(matrices)
def test_rank_nullity(m):
    ncols = len(m[0])
    assert rank(m) + kernel(m, ncols).dim == ncols


@given(matrices, st.integers(0, 10 ** 6))
def test_rref_is_invariant_under_row_mixing(m, seed):
    rng = random.Random(seed)
    r = len(m)
    while True:
        g = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)]
        if bareiss_det(g) != 0:
            break
    mixed = [[sum(g[i][k] * m[k][j] for k in range(r)) for j in range(len(m[0]))] for i in range(r)]
    assert rref(mixed) == rref(m)
    assert span(mixed) == span(m)


@given(st.integers(0, 10 ** 6))
def test_product_dimension_invariant_under_units(seed):
    rng = random.Random(seed)
    e = EtaleAlgebra.split(5)
    V = span([[rng.randint(-5, 5) for _ in range(5)] for _ in range(2)], 5)
    W = span([[rng.randint(-5, 5) for _ in range(5)] for _ in range(3)], 5)
    t = e.element([rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(5)])
    tV = span([(t * e.element(v)).coords for v in V.basis], 5)
    assert mul_subspaces(tV, W, e).dim == mul_subspaces(V, W, e).dim
