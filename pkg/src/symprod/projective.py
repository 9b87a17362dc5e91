"""Linear subspaces of projective space, Plücker coordinates and incidence.

A :class:`Subspace` stores the reduced row-echelon basis of its underlying
vector space, so two subspaces are equal exactly when their stored matrices
are.  Plücker coordinates are indexed by the lexicographically ordered
``k``-subsets of ``{0, ..., n}``; the complement sign of a subset ``I`` is the
sign of the permutation ``(I, I^c)`` of ``(0, ..., n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import AllZero, AmbientMismatch, DimensionMismatch, SymprodError
from .linalg import QQ, Matrix, det, kernel_basis, rank, rref

__all__ = [
    "Subspace",
    "PluckerVector",
    "make_subspace",
    "join",
    "meet",
    "incident",
    "contains",
    "plucker",
    "plucker_subsets",
    "complement_sign",
    "plucker_pairing",
    "plucker_relations_hold",
    "incidence_pairing",
    "gaussian_binomial",
    "random_point",
    "random_invertible",
    "transform",
]


@dataclass(frozen=True)
class Subspace:
    ambient_n: int
    basis: Matrix

    @property
    def field(self):
        return self.basis.field

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return self.basis.nrows - 1

    @property
    def rows(self) -> tuple:
        return self.basis.rows

    def __repr__(self):
        return f"Subspace(P^{self.ambient_n}, dim={self.dim}, rows={[list(map(str, r)) for r in self.rows]})"


def make_subspace(ambient_n: int, rows, field=QQ) -> Subspace:
    """Span of ``rows`` in ``P^ambient_n``; dependent rows are dropped."""
    if not isinstance(rows, Matrix) and any(len(r) != ambient_n + 1 for r in rows):
        raise DimensionMismatch(f"rows must have {ambient_n + 1} entries")
    m = rows if isinstance(rows, Matrix) else Matrix.from_rows(rows, field, ncols=ambient_n + 1)
    if m.ncols != ambient_n + 1:
        raise DimensionMismatch(f"rows must have {ambient_n + 1} entries")
    reduced, rk, _ = rref(m)
    if rk == 0:
        raise AllZero("every spanning row is zero")
    return Subspace(ambient_n, Matrix(reduced.rows[:rk], m.ncols, m.field))


def _check_pair(a: Subspace, b: Subspace):
    if a.ambient_n != b.ambient_n or a.field != b.field:
        raise AmbientMismatch("subspaces live in different projective spaces")


def join(*subspaces: Subspace) -> Subspace:
    """Smallest subspace containing all arguments."""
    if not subspaces:
        raise SymprodError("join of nothing")
    first = subspaces[0]
    for s in subspaces[1:]:
        _check_pair(first, s)
    stacked = reduce(lambda m, s: m.stack(s.basis), subspaces[1:], first.basis)
    return make_subspace(first.ambient_n, stacked)


def meet(a: Subspace, b: Subspace) -> Optional[Subspace]:
    """Intersection, or ``None`` when the subspaces are disjoint."""
    _check_pair(a, b)
    duals = kernel_basis(a.basis).stack(kernel_basis(b.basis))
    common = kernel_basis(duals)
    if common.nrows == 0:
        return None
    return make_subspace(a.ambient_n, common)


def incident(a: Subspace, b: Subspace) -> bool:
    _check_pair(a, b)
    return rank(a.basis.stack(b.basis)) < a.basis.nrows + b.basis.nrows


def contains(big: Subspace, small: Subspace) -> bool:
    _check_pair(big, small)
    return rank(big.basis.stack(small.basis)) == big.basis.nrows


@lru_cache(maxsize=None)
def plucker_subsets(n: int, k: int) -> tuple:
    """Lexicographic ``k``-subsets of ``{0..n}``."""
    return tuple(combinations(range(n + 1), k))


def complement_sign(subset: Sequence[int]) -> int:
    """Sign of the permutation ``(I, I^c)`` of ``(0..n)``."""
    k = len(subset)
    return -1 if (sum(subset) - k * (k - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class PluckerVector:
    ambient_n: int
    k: int
    coords: tuple
    field: object = QQ

    def as_dict(self) -> dict:
        return dict(zip(plucker_subsets(self.ambient_n, self.k), self.coords))

    def __getitem__(self, subset) -> object:
        return self.as_dict()[tuple(subset)]


def _minors(m: Matrix, n: int) -> tuple:
    k = m.nrows
    out = []
    for cols in plucker_subsets(n, k):
        sub = Matrix(tuple(tuple(r[c] for c in cols) for r in m.rows), k, m.field)
        out.append(det(sub))
    return tuple(out)


def _canonical(coords: tuple, field) -> tuple:
    lead = next(x for x in coords if x != 0)
    if field == QQ:
        den = reduce(lcm, (Fraction(x).denominator for x in coords), 1)
        ints = [int(Fraction(x) * den) for x in coords]
        g = reduce(gcd, ints, 0)
        s = 1 if lead > 0 else -1
        return tuple(Fraction(s * v // g) for v in ints)
    inv = field.inv(lead)
    return tuple(field.reduce(x * inv) for x in coords)


def plucker(s: Subspace) -> PluckerVector:
    raw = _minors(s.basis, s.ambient_n)
    return PluckerVector(s.ambient_n, s.basis.nrows, _canonical(raw, s.field), s.field)


def raw_minors(s: Subspace) -> tuple:
    """Uncanonicalised maximal minors of the stored basis."""
    return _minors(s.basis, s.ambient_n)


def plucker_pairing(p: Sequence, q: Sequence, n: int, k: int, field=QQ):
    """``sum_I sign(I) p_I q_{I^c}`` for ``p`` of rank ``k`` and ``q`` of rank ``n+1-k``."""
    full = frozenset(range(n + 1))
    q_index = {s: i for i, s in enumerate(plucker_subsets(n, n + 1 - k))}
    total = field.zero
    for i, subset in enumerate(plucker_subsets(n, k)):
        if p[i] == 0:
            continue
        comp = tuple(sorted(full.difference(subset)))
        total += complement_sign(subset) * p[i] * q[q_index[comp]]
    return field.reduce(total)


def _signed_coord(table: dict, seq: tuple):
    if len(set(seq)) < len(seq):
        return 0
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    val = table[tuple(sorted(seq))]
    return -val if inversions % 2 else val


def plucker_relations_hold(p: PluckerVector) -> bool:
    """Check every Grassmann-Plücker quadric on ``p``."""
    k, n = p.k, p.ambient_n
    if k in (1, n, n + 1):
        return True
    table = p.as_dict()
    red = p.field.reduce
    for small in combinations(range(n + 1), k - 1):
        for big in combinations(range(n + 1), k + 1):
            total = 0
            for t, j in enumerate(big):
                rest = big[:t] + big[t + 1:]
                term = _signed_coord(table, small + (j,)) * _signed_coord(table, rest)
                total += -term if t % 2 else term
            if red(total) != 0:
                return False
    return True


def incidence_pairing(l: Subspace, L: Subspace):
    """Determinant of the stacked bases of complementary subspaces.

    Zero exactly when ``l`` and ``L`` meet.
    """
    _check_pair(l, L)
    if l.dim + L.dim != l.ambient_n - 1:
        raise DimensionMismatch("incidence pairing needs dim l + dim L = n - 1")
    return det(l.basis.stack(L.basis))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``GF(q)^n``."""
    if not 0 <= k <= n:
        raise SymprodError("need 0 <= k <= n")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def random_point(s: Subspace, rng, bound: int = 100) -> Subspace:
    """Random point of ``s``: an integer combination of its basis rows."""
    field = s.field
    while True:
        coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=s.basis.nrows)]
        vec = [field.reduce(sum(field(c) * x for c, x in zip(coeffs, col)))
               for col in zip(*s.rows)]
        if any(v != 0 for v in vec):
            return make_subspace(s.ambient_n, [vec], field)


def random_invertible(size: int, rng, field=QQ, bound: int = 5) -> Matrix:
    while True:
        m = Matrix.from_rows(rng.integers(-bound, bound + 1, size=(size, size)).tolist(), field)
        if rank(m) == size:
            return m


def transform(s: Subspace, change: Matrix) -> Subspace:
    """Image of ``s`` under the coordinate change ``x -> x @ change``."""
    return make_subspace(s.ambient_n, s.basis @ change)
