"""Exact linear algebra over Q.

Matrices are sequences of rows of Fractions.  A :class:`Subspace` is stored by
its reduced row echelon basis, which is a complete invariant: two subspaces
are equal exactly when their RREF matrices coincide.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError
from .exactnum import rat, rat_str

Row = tuple[Fraction, ...]
Matrix = tuple[Row, ...]


def as_matrix(rows: Iterable[Iterable]) -> list[list[Fraction]]:
    m = [[rat(c) for c in row] for row in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def rref_pivots(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Gauss-Jordan elimination.  Returns (rref, pivot columns); zero rows kept."""
    a = as_matrix(m)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a), tuple(pivots)


def rref(m: Sequence[Sequence]) -> Matrix:
    return rref_pivots(m)[0]


def rank(m: Sequence[Sequence]) -> int:
    return len(rref_pivots(m)[1])


def det(m: Sequence[Sequence]) -> Fraction:
    a = as_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of the square system ``a x = b``."""
    n = len(a)
    aug = [list(row) + [rat(bi)] for row, bi in zip(as_matrix(a), b)]
    red, piv = rref_pivots(aug, ncols=n)
    if len(piv) != n:
        raise ValueError("singular system")
    return tuple(red[i][n] for i in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x != 0) for row in self.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the RREF basis (``v`` must be a member)."""
        coeffs = tuple(rat(v[p]) for p in self.pivots)
        recon = [sum((c * row[j] for c, row in zip(coeffs, self.basis)), Fraction(0))
                 for j in range(self.ambient_dim)]
        if any(x != rat(y) for x, y in zip(recon, v)):
            raise ValueError("vector is not in the subspace")
        return coeffs

    def to_json(self) -> list[list[str]]:
        return [[rat_str(x) for x in row] for row in self.basis]


def _check_dims(*dims: int) -> None:
    if len(set(dims)) > 1:
        raise ValidationError("ambient dimension mismatch", dims=",".join(map(str, dims)))


def span(vectors: Iterable[Sequence], ambient_dim: int | None = None) -> Subspace:
    vecs = as_matrix(vectors)
    if ambient_dim is None:
        if not vecs:
            raise ValueError("ambient_dim needed for an empty span")
        ambient_dim = len(vecs[0])
    if vecs:
        _check_dims(ambient_dim, len(vecs[0]))
    red, piv = rref_pivots(vecs, ncols=ambient_dim)
    return Subspace(ambient_dim, red[: len(piv)])


def kernel(m: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """Right null space ``{x : m x = 0}``."""
    rows = as_matrix(m)
    if ncols is None:
        if not rows:
            raise ValueError("ncols needed for an empty matrix")
        ncols = len(rows[0])
    red, piv = rref_pivots(rows, ncols=ncols)
    free = [c for c in range(ncols) if c not in piv]
    vecs = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -red[r][f]
        vecs.append(v)
    return span(vecs, ambient_dim=ncols)


def annihilator(s: Subspace) -> Subspace:
    """Linear functionals (as coefficient rows) vanishing on ``s``."""
    return kernel(s.basis, ncols=s.ambient_dim)


def member(v: Sequence, s: Subspace) -> bool:
    _check_dims(len(v), s.ambient_dim)
    w = [rat(x) for x in v]
    for row, p in zip(s.basis, s.pivots):
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def contains(big: Subspace, small: Subspace) -> bool:
    """True when ``small`` is a subspace of ``big``."""
    _check_dims(big.ambient_dim, small.ambient_dim)
    return all(member(row, big) for row in small.basis)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    _check_dims(s1.ambient_dim, s2.ambient_dim)
    conds = annihilator(s1).basis + annihilator(s2).basis
    return kernel(conds, ncols=s1.ambient_dim)


def mul_subspaces(v: Subspace, w: Subspace, algebra) -> Subspace:
    """Span of all products ``v_i * w_j`` computed in the étale algebra."""
    _check_dims(v.ambient_dim, w.ambient_dim, algebra.degree)
    prods = []
    for a in v.basis:
        ea = algebra.element(a)
        for b in w.basis:
            prods.append((ea * algebra.element(b)).coords)
    return span(prods, ambient_dim=algebra.degree)


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane ``{x : trace(c x) = 0}``, with ``c`` scaled so its first
    nonzero coordinate is 1."""

    dual: object  # AlgElement

    def __post_init__(self):
        c = self.dual
        lead = next((x for x in c.coords if x != 0), None)
        if lead is None:
            raise ValidationError("zero dual element does not define a hyperplane")
        if lead != 1:
            object.__setattr__(self, "dual", c * (1 / lead))

    @property
    def algebra(self):
        return self.dual.parent

    def functional(self) -> Row:
        e = self.algebra
        return tuple(e.trace(self.dual * b) for b in e.basis())

    def as_subspace(self) -> Subspace:
        return kernel([self.functional()], ncols=self.algebra.degree)

    def to_json(self) -> list[str]:
        return [rat_str(x) for x in self.dual.coords]
