import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twisted_m0n.projective import mobius, normal_form


def test_first_three_points_go_to_zero_one_infinity():
    pts = [(Fraction(5), Fraction(1)), (Fraction(7), Fraction(1)), (Fraction(1), Fraction(0)),
           (Fraction(5), Fraction(1)), (Fraction(7), Fraction(1)), (Fraction(1), Fraction(0))]
    with pytest.raises(ValueError):
        normal_form(pts)
    # z -> (z - 5)/2 sends 5, 7, inf to 0, 1, inf; so 9 -> 2
    assert normal_form(pts[:3] + [(Fraction(9), Fraction(1))]) == (2,)


@given(st.integers(0, 10 ** 6))
def test_normal_form_is_mobius_invariant(seed):
    rng = random.Random(seed)
    pts = [(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))) for _ in range(6)]
    m = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)]
    if m[0][0] * m[1][1] == m[0][1] * m[1][0]:
        return
    try:
        nf = normal_form(pts)
    except ValueError:
        return
    moved = []
    for p in pts:
        k = rng.randint(1, 3)
        moved.append(tuple(k * c for c in mobius(m, p)))
    assert normal_form(moved) == nf
