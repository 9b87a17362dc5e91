"""Intersection form on ``N^1(C^(2))`` and slope certificates for the nef cone.

Classes are written in the basis ``{x, delta/2}`` with ``x^2 = 1``,
``x . delta/2 = 1`` and ``(delta/2)^2 = 1 - g``.  The class
``(a+b) x - b delta/2`` pairs with ``(c+d) x - d delta/2`` to ``ac - bdg``.

A slope certificate ``(a, b)`` for genus ``g`` lives on ``D^(2)`` where ``D``
has genus ``g - 1``.  With ``L = (a+b) x - b delta/2`` it asks that no
``m >= 2`` satisfies ``m(m-1) + c <= (bm - 1)^2 / L^2``, i.e. that

    f(m) = L^2 (m^2 - m + c) - (bm - 1)^2

is positive at every integer ``m >= 2``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from ._workers import ordered_map
from .curves import generic_gonality
from .errors import AdvisoryWarning, BadInput, NoCertificate

__all__ = [
    "NSClass",
    "intersect",
    "nef_boundary_rays",
    "slope_at_least_sqrt_genus",
    "default_gonality_constant",
    "CertReport",
    "quadratic_coefficients",
    "verify_tau_certificate",
    "search_min_ratio",
]


# numerators beyond this are not searched
A_MAX = 2**64


@dataclass(frozen=True)
class NSClass:
    coeff_x: Fraction
    coeff_half_delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeff_x", Fraction(self.coeff_x))
        object.__setattr__(self, "coeff_half_delta", Fraction(self.coeff_half_delta))

    @classmethod
    def from_ab(cls, a, b) -> "NSClass":
        """The class ``(a+b) x - b delta/2``."""
        return cls(Fraction(a) + Fraction(b), -Fraction(b))

    def __add__(self, other: "NSClass") -> "NSClass":
        return NSClass(self.coeff_x + other.coeff_x, self.coeff_half_delta + other.coeff_half_delta)

    def __rmul__(self, scalar) -> "NSClass":
        s = Fraction(scalar)
        return NSClass(s * self.coeff_x, s * self.coeff_half_delta)


def intersect(u: NSClass, v: NSClass, g: int) -> Fraction:
    if g < 0:
        raise BadInput("genus must be non-negative")
    return (u.coeff_x * v.coeff_x
            + u.coeff_x * v.coeff_half_delta
            + u.coeff_half_delta * v.coeff_x
            + u.coeff_half_delta * v.coeff_half_delta * (1 - g))


def nef_boundary_rays(g: int, tau) -> tuple:
    """``(g-1) x - delta/2`` and ``(tau+1) x - delta/2``."""
    tau = Fraction(tau)
    if g < 2 or tau < 0:
        raise BadInput("need g >= 2 and tau >= 0")
    return NSClass(g - 1, -1), NSClass(tau + 1, -1)


def slope_at_least_sqrt_genus(tau, g: int) -> bool:
    """``tau >= sqrt(g)``, decided on squares."""
    tau = Fraction(tau)
    return tau >= 0 and tau * tau >= g


def default_gonality_constant(g: int) -> int:
    """Lower bound for the gonality of the central curve in the genus-``g`` argument.

    For ``g = 6`` it is the generic gonality of genus 5; for ``g >= 7`` the
    singular central curve is not isomorphic to ``D`` and gains one.  Only
    ``g`` in ``{6, 7, 8}`` is backed by a proof, other genera warn.
    """
    if g < 3:
        raise BadInput("need g >= 3")
    if g not in (6, 7, 8):
        warnings.warn(f"gonality constant for genus {g} is extrapolated, not proved",
                      AdvisoryWarning, stacklevel=2)
    return generic_gonality(g - 1) + (1 if g >= 7 else 0)


@dataclass(frozen=True)
class CertReport:
    valid: bool
    g: int
    a: int
    b: int
    c: int
    tau_prev: Fraction
    ratio: Fraction
    l_squared: int
    quadratic: tuple
    discriminant: int
    evidence: object  # "discriminant" or the tuple of integer points checked
    failed_check: Optional[str] = None
    advisory: bool = False


def quadratic_coefficients(l_squared: int, b: int, c: int) -> tuple:
    """``(A, B, C)`` with ``f(m) = A m^2 + B m + C``."""
    return (l_squared - b * b, -l_squared + 2 * b, l_squared * c - 1)


def _eval(q, m):
    A, B, C = q
    return (A * m + B) * m + C


def verify_tau_certificate(g: int, a: int, b: int, tau_prev, c: Optional[int] = None) -> CertReport:
    """Check a slope certificate ``tau(C) <= a/b`` for very general ``C`` of genus ``g``.

    Checks, in order: ``a/b >= tau_prev``; ``L^2 = a^2 - b^2 (g-1) > 0``;
    ``f(m) > 0`` for every integer ``m >= 2``.  The last is decided exactly:
    a negative discriminant settles it, otherwise every integer from 2 up to
    the larger real root is evaluated.
    """
    if isinstance(a, bool) or isinstance(b, bool) or int(a) != a or int(b) != b or a <= 0 or b <= 0:
        raise BadInput("a and b must be positive integers")
    if g < 3:
        raise BadInput("need g >= 3")
    a, b = int(a), int(b)
    tau_prev = Fraction(tau_prev)
    advisory = g not in (6, 7, 8)
    if c is None:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", AdvisoryWarning)
            c = default_gonality_constant(g)
    ratio = Fraction(a, b)
    l2 = a * a - b * b * (g - 1)
    q = quadratic_coefficients(l2, b, c)
    A, B, C = q
    disc = B * B - 4 * A * C
    base = dict(g=g, a=a, b=b, c=c, tau_prev=tau_prev, ratio=ratio, l_squared=l2,
                quadratic=q, discriminant=disc, advisory=advisory)

    if ratio < tau_prev:
        return CertReport(False, evidence=(), failed_check="ratio", **base)
    if l2 <= 0:
        return CertReport(False, evidence=(), failed_check="l_squared", **base)
    if A <= 0:
        return CertReport(False, evidence=(), failed_check="leading_coefficient", **base)
    if disc < 0:
        return CertReport(True, evidence="discriminant", **base)
    # f > 0 beyond the larger root r = (-B + sqrt(disc)) / 2A; this top is >= ceil(r)
    top = -((B - isqrt(disc) - 1) // (2 * A))
    points = tuple(range(2, top + 1))
    for m in points:
        if _eval(q, m) <= 0:
            return CertReport(False, evidence=points[: m - 1], failed_check="integer_point", **base)
    return CertReport(True, evidence=points, **base)


def _min_a(g, b, c, tau_prev):
    """Least ``a <= A_MAX`` giving a valid certificate for this ``b``, or ``None``.

    Validity is monotone in ``a``: the ratio grows and ``f`` grows with ``L^2``.
    """
    lo = max(isqrt(b * b * (g - 1)) + 1, -((-tau_prev.numerator * b) // tau_prev.denominator), 1)
    if lo > A_MAX:
        return None
    ok = lambda a: verify_tau_certificate(g, a, b, tau_prev, c).valid  # noqa: E731
    hi = lo
    while not ok(hi):
        if hi == A_MAX:
            return None
        hi = min(2 * hi, A_MAX)
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def search_min_ratio(g: int, c: int, tau_prev, b_max: int):
    """Smallest certified ratio ``a/b`` with ``1 <= b <= b_max`` and ``a <= A_MAX``.

    Returns ``(a, b, report)``; ties go to the smaller ``b``.
    """
    if b_max < 1:
        raise BadInput("b_max must be >= 1")
    tau_prev = Fraction(tau_prev)
    best_as = ordered_map(lambda b: _min_a(g, b, c, tau_prev), range(1, b_max + 1))
    best = None
    for b, a in enumerate(best_as, start=1):
        if a is None:
            continue
        if best is None or Fraction(a, b) < Fraction(*best):
            best = (a, b)
    if best is None:
        raise NoCertificate("no valid certificate in range")
    a, b = best
    return a, b, verify_tau_certificate(g, a, b, tau_prev, c)
