"""Special position of linear subspaces with respect to complementary planes.

``(k-1)``-planes ``l_1, ..., l_d`` of ``P^n`` are in special position when
every ``(n-k)``-plane meeting all but one of them meets the last one too.

:func:`decide` is sound but incomplete.  A *Special* verdict is backed by a
linear dependency among Plücker vectors (each ``p(l_j)`` lies in the span of
the others, and meeting ``L`` is a linear condition on ``p(l)``), a
*NotSpecial* verdict by an explicit witness plane, and everything else is
reported as *Undecided*.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Optional, Union

import numpy as np

from ._workers import ordered_map
from .errors import BadIndex, BadParams, DimensionMismatch, NotCertified, SymprodError, TooLarge
from .linalg import QQ, Matrix, PrimeField, solve_linear
from .projective import (
    Subspace,
    contains,
    gaussian_binomial,
    incident,
    join,
    make_subspace,
    meet,
    plucker,
    random_point,
)

__all__ = [
    "Configuration",
    "Special",
    "NotSpecial",
    "Undecided",
    "SpanBound",
    "cb_linear_test",
    "sample_witness",
    "decide",
    "verify_certificate",
    "check_span_bound",
    "all_but_one_containment",
    "oracle_ffield",
    "ffield_census",
    "enumerate_subspaces",
    "reduce_mod",
    "gen_fixture",
    "FAMILIES",
]

COEFF_BOUND = 100
ORACLE_LIMIT = 10**7


@dataclass(frozen=True)
class Configuration:
    n: int
    k: int
    subspaces: tuple
    field: object = QQ

    def __post_init__(self):
        object.__setattr__(self, "subspaces", tuple(self.subspaces))
        if not 1 <= self.k <= self.n:
            raise BadParams(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if len(self.subspaces) < 2:
            raise BadParams("a configuration needs at least two subspaces")
        for s in self.subspaces:
            if s.ambient_n != self.n or s.field != self.field:
                raise DimensionMismatch("subspace does not live in the configuration's P^n")
            if s.dim != self.k - 1:
                raise DimensionMismatch(f"expected a {self.k - 1}-plane, got dimension {s.dim}")

    @classmethod
    def from_rows(cls, n: int, k: int, subspace_rows, field=QQ) -> "Configuration":
        return cls(n, k, tuple(make_subspace(n, rows, field) for rows in subspace_rows), field)

    @property
    def d(self) -> int:
        return len(self.subspaces)

    def permuted(self, order) -> "Configuration":
        return Configuration(self.n, self.k, tuple(self.subspaces[i] for i in order), self.field)


@dataclass(frozen=True)
class Special:
    """``dependencies[j][i]`` is the coefficient of ``p(l_i)`` in ``p(l_j)``."""

    dependencies: tuple
    verdict: str = dc_field(default="special", init=False)


@dataclass(frozen=True)
class NotSpecial:
    excluded_index: int
    witness: Subspace
    verdict: str = dc_field(default="not_special", init=False)


@dataclass(frozen=True)
class Undecided:
    trials_used: int
    verdict: str = dc_field(default="undecided", init=False)


Certificate = Union[Special, NotSpecial, Undecided]


def cb_linear_test(c: Configuration) -> Optional[Special]:
    """Special certificate if every Plücker point lies in the span of the others."""
    vecs = [plucker(s).coords for s in c.subspaces]
    deps = []
    for j in range(c.d):
        others = [i for i in range(c.d) if i != j]
        # columns are the other Plücker vectors
        m = Matrix(tuple(zip(*(vecs[i] for i in others))), len(others), c.field)
        sol = solve_linear(m, vecs[j])
        if sol is None:
            return None
        coeffs = [c.field.zero] * c.d
        for i, x in zip(others, sol):
            coeffs[i] = x
        deps.append(tuple(coeffs))
    return Special(tuple(deps))


def _rng(seed: int, j: int):
    return np.random.default_rng([int(seed) & (2**64 - 1), j])


def _t2_applicable(c: Configuration) -> bool:
    return c.d - 1 <= c.n - c.k + 1


def _t3_applicable(c: Configuration) -> bool:
    return c.k == 2 and c.n == 3 and c.d == 4


def _is_witness(c: Configuration, j: int, L: Subspace) -> bool:
    if L.dim != c.n - c.k:
        return False
    if incident(L, c.subspaces[j]):
        return False
    return all(incident(L, s) for i, s in enumerate(c.subspaces) if i != j)


def _t2_trial(c: Configuration, j: int, rng) -> Optional[Subspace]:
    target = c.n - c.k
    others = [i for i in range(c.d) if i != j]
    span = None
    for pos, i in enumerate(others):
        li = c.subspaces[i]
        if span is not None and incident(span, li):
            continue
        # a point shared with a later subspace serves both at once
        pools = [li]
        for i2 in others[pos + 1:]:
            common = meet(li, c.subspaces[i2])
            if common is not None:
                pools.append(common)
        pool = pools[int(rng.integers(len(pools)))]
        pt = random_point(pool, rng, COEFF_BOUND)
        span = pt if span is None else join(span, pt)
        if span.dim > target:
            return None
    whole = make_subspace(c.n, Matrix.identity(c.n + 1, c.field))
    while span.dim < target:
        span = join(span, random_point(whole, rng, COEFF_BOUND))
    return span


def _t3_trial(c: Configuration, j: int, trial: int, rng) -> Optional[Subspace]:
    others = [i for i in range(c.d) if i != j]
    a = others[trial % 3]
    b, cc = [i for i in others if i != a]
    la, lb, lc = (c.subspaces[i] for i in (a, b, cc))
    p = random_point(la, rng, COEFF_BOUND)
    if contains(lb, p) or contains(lc, p):
        return None
    L = meet(join(p, lb), join(p, lc))
    if L is None or L.dim != 1:
        return None
    return L


def sample_witness(c: Configuration, j: int, trials: int, seed: int) -> Optional[Subspace]:
    """Seeded random search for an ``(n-k)``-plane meeting every ``l_i`` but ``l_j``."""
    if not 0 <= j < c.d:
        raise BadIndex(f"index {j} out of range for {c.d} subspaces")
    if trials < 1:
        raise BadParams("trials must be >= 1")
    if _t2_applicable(c):
        trial_fn = lambda t, rng: _t2_trial(c, j, rng)  # noqa: E731
    elif _t3_applicable(c):
        trial_fn = lambda t, rng: _t3_trial(c, j, t, rng)  # noqa: E731
    else:
        return None
    rng = _rng(seed, j)
    for t in range(trials):
        L = trial_fn(t, rng)
        if L is not None and _is_witness(c, j, L):
            return L
    return None


def decide(c: Configuration, trials: int = 200, seed: int = 0) -> Certificate:
    cert = cb_linear_test(c)
    if cert is not None:
        return cert
    if trials < 1:
        raise BadParams("trials must be >= 1")
    # every j gets its own stream, so the lowest successful j is partition-independent
    found = ordered_map(lambda j: sample_witness(c, j, trials, seed), range(c.d))
    for j, L in enumerate(found):
        if L is not None:
            return NotSpecial(j, L)
    return Undecided(trials)


def verify_certificate(c: Configuration, cert: Certificate) -> bool:
    """Re-check a certificate from scratch."""
    if isinstance(cert, Special):
        vecs = [plucker(s).coords for s in c.subspaces]
        red = c.field.reduce
        for j, coeffs in enumerate(cert.dependencies):
            if coeffs[j] != 0:
                return False
            combo = tuple(red(sum(coeffs[i] * vecs[i][t] for i in range(c.d)))
                          for t in range(len(vecs[j])))
            if combo != vecs[j]:
                return False
        return True
    if isinstance(cert, NotSpecial):
        return 0 <= cert.excluded_index < c.d and _is_witness(c, cert.excluded_index, cert.witness)
    return False


@dataclass(frozen=True)
class SpanBound:
    span_dim: int
    bound: int
    ok: Optional[bool]

    @property
    def applicable(self) -> bool:
        return self.ok is not None

    @property
    def within_bound(self) -> bool:
        return self.span_dim <= self.bound


def check_span_bound(c: Configuration) -> SpanBound:
    """Span dimension against ``floor(k d / 2) - 1``.

    ``ok`` is ``None`` for ``k = 1``, where the bound is false in general
    (three collinear points are special but span a line).
    """
    span_dim = join(*c.subspaces).dim
    bound = c.k * c.d // 2 - 1
    ok = span_dim <= bound if c.k >= 2 else None
    return SpanBound(span_dim, bound, ok)


def all_but_one_containment(c: Configuration, j: int, strict: bool = False) -> bool:
    """Whether ``l_j`` lies in the join of the other subspaces."""
    if not 0 <= j < c.d:
        raise BadIndex(f"index {j} out of range for {c.d} subspaces")
    if strict and cb_linear_test(c) is None:
        raise NotCertified("configuration has no linear special-position certificate")
    rest = join(*(s for i, s in enumerate(c.subspaces) if i != j))
    return contains(rest, c.subspaces[j])


# finite-field oracle


def _pivot_sets(ncols: int, nrows: int):
    from itertools import combinations
    return combinations(range(ncols), nrows)


def enumerate_subspaces(vec_dim: int, sub_dim: int, p: int):
    """Yield every ``sub_dim``-dimensional subspace of ``GF(p)^vec_dim``.

    Each one appears once, as a reduced echelon matrix (a numpy int array),
    grouped by pivot set.
    """
    for pivots in _pivot_sets(vec_dim, sub_dim):
        free = [(r, col) for r, pc in enumerate(pivots)
                for col in range(pc + 1, vec_dim) if col not in pivots]
        base = np.zeros((sub_dim, vec_dim), dtype=np.int64)
        for r, pc in enumerate(pivots):
            base[r, pc] = 1
        for values in product(range(p), repeat=len(free)):
            m = base.copy()
            for (r, col), v in zip(free, values):
                m[r, col] = v
            yield m


def _annihilator(m: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the kernel of a reduced echelon ``m`` (as ``m @ K = 0``)."""
    nrows, ncols = m.shape
    pivots = [int(np.flatnonzero(row)[0]) for row in m]
    free = [c for c in range(ncols) if c not in pivots]
    K = np.zeros((ncols, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        K[f, t] = 1
        for r, pc in enumerate(pivots):
            K[pc, t] = (-m[r, f]) % p
    return K


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    a = m.copy() % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
        if r == rows:
            break
    return r


def ffield_census(c: Configuration):
    """Exhaustive special-position check over ``GF(p)``.

    Returns ``(special, planes_checked)``.
    """
    if not isinstance(c.field, PrimeField):
        raise SymprodError("the finite-field oracle needs a configuration over GF(p)")
    p = c.field.p
    plane_dim = c.n - c.k + 1
    total = gaussian_binomial(c.n + 1, plane_dim, p)
    if total > ORACLE_LIMIT:
        raise TooLarge(f"{total} planes exceed the oracle limit {ORACLE_LIMIT}")
    lines = [np.array(s.rows, dtype=np.int64) for s in c.subspaces]
    count = 0
    for L in enumerate_subspaces(c.n + 1, plane_dim, p):
        count += 1
        K = _annihilator(L, p)
        # l meets L iff the restriction of L's annihilator to l drops rank
        missed = [j for j, l in enumerate(lines) if _rank_mod_p(l @ K, p) == c.k]
        if len(missed) == 1:
            return False, count
    return True, count


def oracle_ffield(c: Configuration) -> bool:
    return ffield_census(c)[0]


def reduce_mod(c: Configuration, p: int) -> Configuration:
    """Reduce a rational configuration modulo ``p``.

    Raises if a denominator vanishes or a subspace drops dimension.
    """
    field = PrimeField(p)
    subs = []
    for s in c.subspaces:
        r = make_subspace(c.n, [[field(x) for x in row] for row in s.rows], field)
        if r.dim != s.dim:
            raise SymprodError(f"subspace degenerates modulo {p}")
        subs.append(r)
    return Configuration(c.n, c.k, tuple(subs), field)


# fixtures


def _unit(n: int, *pairs) -> list:
    v = [0] * (n + 1)
    for i, x in pairs:
        v[i] = x
    return v


def _pencil(d: int, n: int):
    if d < 2 or n < 3:
        raise BadParams("pencil needs d >= 2 and n >= 3")
    e0 = _unit(n, (0, 1))
    lines = [[e0, _unit(n, (1, 1))], [e0, _unit(n, (2, 1))]]
    lines += [[e0, _unit(n, (1, 1), (2, t))] for t in range(1, d - 1)]
    return Configuration.from_rows(n, 2, lines)


def _quadric_ruling(d: int, ts=None):
    ts = list(range(d)) if ts is None else [Fraction(t) for t in ts]
    if d < 2 or len(ts) != d or len(set(ts)) != d:
        raise BadParams("quadric ruling needs d >= 2 distinct parameters")
    return Configuration.from_rows(3, 2, [[[1, t, 0, 0], [0, 0, 1, t]] for t in ts])


def _scroll(d: int, ts=None):
    ts = list(range(d)) if ts is None else [Fraction(t) for t in ts]
    if d < 4 or len(ts) != d or len(set(ts)) != d:
        raise BadParams("scroll needs d >= 4 distinct parameters")
    n = d - 1
    lines = []
    for t in ts:
        first = _unit(n, (0, 1), (1, t))
        second = [0, 0] + [t**e for e in range(d - 2)]
        lines.append([first, second])
    return Configuration.from_rows(n, 2, lines)


def _triangle(n: int = 3):
    if n < 2:
        raise BadParams("triangle needs n >= 2")
    e = [_unit(n, (i, 1)) for i in range(3)]
    return Configuration.from_rows(n, 2, [[e[0], e[1]], [e[1], e[2]], [e[0], e[2]]])


def _random_skew(d: int, n: int, seed: int, bound: int = 9):
    if d < 2 or n < 3:
        raise BadParams("random skew lines need d >= 2 and n >= 3")
    rng = np.random.default_rng([int(seed) & (2**64 - 1), d, n])
    lines = []
    while len(lines) < d:
        rows = rng.integers(-bound, bound + 1, size=(2, n + 1)).tolist()
        try:
            cand = make_subspace(n, rows)
        except SymprodError:
            continue
        if cand.dim == 1 and all(not incident(cand, l) for l in lines):
            lines.append(cand)
    return Configuration(n, 2, tuple(lines))


FAMILIES = {
    "pencil": _pencil,
    "quadric_ruling": _quadric_ruling,
    "scroll": _scroll,
    "triangle": _triangle,
    "random_skew": _random_skew,
}


def gen_fixture(family: str, **params) -> Configuration:
    """Build a named line configuration.

    ``pencil(d, n)``
        ``d`` concurrent coplanar lines through ``e0`` in the plane
        ``span(e0, e1, e2)``; the first three are ``span(e0, e1)``,
        ``span(e0, e2)``, ``span(e0, e1 + e2)``.
    ``quadric_ruling(d, ts)``
        lines ``span((1,t,0,0), (0,0,1,t))`` of one ruling of ``xw = yz``.
    ``scroll(d, ts)``
        lines ``span((1,t,0..0), (0,0,1,t,..,t^(d-3)))`` in ``P^(d-1)``.
    ``triangle(n)``
        the three sides of the coordinate triangle in ``P^n``.
    ``random_skew(d, n, seed)``
        pairwise skew random integer lines.
    """
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise BadParams(f"unknown fixture family {family!r}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise BadParams(str(exc)) from exc
