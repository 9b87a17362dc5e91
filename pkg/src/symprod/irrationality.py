"""Bound tables for the degree of irrationality and degree of gonality of ``C^(k)``.

Provenance tags are stable strings prefixed by the side they justify
(``"lo:"`` or ``"hi:"``, or ``"eq:"`` for results that pin the value).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional

from .curves import CurveProfile
from .errors import BadParams, InconsistentProfile, MissingGonality

__all__ = [
    "BoundInterval",
    "degirr_interval",
    "degirr_kfold_lower",
    "deg_gonality",
    "MovingGonality",
    "moving_gonality_lower",
    "cover_upper_bound",
]

# lower bounds for non-hyperelliptic curves of genus 3..6; genus >= 7 gives 6
_NON_HYPERELLIPTIC_TABLE = {3: 3, 4: 3, 5: 4, 6: 5}


@dataclass(frozen=True)
class BoundInterval:
    lo: int
    hi: Optional[int]
    exact: bool
    provenance: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        if self.lo < 1 or (self.hi is not None and self.hi < self.lo):
            raise InconsistentProfile(f"empty bound interval [{self.lo}, {self.hi}]")
        if self.exact and self.hi != self.lo:
            raise ValueError("an exact interval must have hi == lo")

    def __contains__(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)


def degirr_kfold_lower(g: int, k: int) -> int:
    """``deg_r(C^(k)) >= k + 1`` whenever ``g >= k >= 2``."""
    if not g >= k >= 2:
        raise BadParams("need g >= k >= 2")
    return k + 1


def cover_upper_bound(g: int, cover_degree: int, target_genus: int = 1) -> int:
    """Upper bound on ``deg_r(C^(2))`` from a degree-``d`` cover of a low-genus curve.

    Covering an elliptic curve gives ``2 d^2`` once ``g >= 2 d^2 + 2``;
    covering the genus-2 curve whose symmetric square has degree of
    irrationality 3 gives ``3 d^2`` once ``g >= 3 d^2 + 2``.  In both ranges
    the bound beats ``g - 1``.
    """
    factor = {1: 2, 2: 3}.get(target_genus)
    if factor is None:
        raise BadParams("target genus must be 1 or 2")
    d = cover_degree
    if d < 2 or g < factor * d * d + 2:
        raise BadParams(f"need d >= 2 and g >= {factor}d^2 + 2")
    return factor * d * d


def _upper_terms(p: CurveProfile):
    g = p.genus
    delta = p.known_delta()
    terms = []
    if 1 in delta:
        terms.append((delta[1] ** 2, "hi:product-of-pencils"))
    if 2 in delta:
        terms.append((comb(delta[2], 2), "hi:plane-model-secants"))
    if 3 in delta:
        terms.append(((delta[3] - 1) * (delta[3] - 2) // 2 - g, "hi:space-model-projection"))
    if p.elliptic_cover_degree is not None:
        d = p.elliptic_cover_degree
        if g >= 2 * d * d + 2:
            terms.append((cover_upper_bound(g, d), "hi:elliptic-cover"))
    return terms


def degirr_interval(p: CurveProfile) -> BoundInterval:
    """Interval containing ``deg_r(C^(2))``."""
    g, cls = p.genus, p.curve_class
    if g == 0:
        return BoundInterval(1, 1, True, ("eq:rational-surface",))
    if g == 1:
        return BoundInterval(2, 2, True, ("eq:elliptic-ruled",))
    if cls == "hyperelliptic" and g >= 4:
        return BoundInterval(4, 4, True, ("eq:hyperelliptic-square-of-gonality",))

    lows = [(3, "lo:holomorphic-length")]
    notes = []
    if cls in ("non_hyperelliptic", "very_general") and g >= 3:
        lows.append((_NON_HYPERELLIPTIC_TABLE.get(g, 6), "lo:non-hyperelliptic-genus-table"))
        gon = p.known_gonality
        if g >= 7 and gon is not None:
            lows.append((gon, "lo:non-hyperelliptic-gonality"))
    if cls == "very_general" and g >= 4:
        lows.append((g - 1, "lo:very-general-genus-minus-one"))
    if cls == "very_general":
        d2 = p.known_delta().get(2)
        if d2 is not None:
            notes.append(f"conjectural value away from finitely many genera: C({d2}, 2) = {comb(d2, 2)}")
    if cls == "hyperelliptic":
        notes.append("exact value open for hyperelliptic genus 2 and 3")

    lo = max(v for v, _ in lows)
    terms = _upper_terms(p)
    hi = min((v for v, _ in terms), default=None)
    if hi is not None and hi < lo:
        raise InconsistentProfile(f"supplied data give upper bound {hi} below lower bound {lo}")
    prov = tuple(tag for v, tag in lows if v == lo) + tuple(tag for v, tag in terms if v == hi)
    return BoundInterval(lo, hi, hi == lo, prov, tuple(notes))


def deg_gonality(p: CurveProfile, k: int = 2) -> BoundInterval:
    """Interval containing ``deg_o(C^(k))``."""
    if k < 2:
        raise BadParams("need k >= 2")
    g = p.genus
    if k == 2:
        if g <= 1:
            return BoundInterval(1, 1, True, ("eq:covered-by-rational-curves",))
        if g == 2:
            return BoundInterval(2, 2, True, ("eq:genus-two-abel-fibre",))
        gon = p.known_gonality
        if gon is None:
            raise MissingGonality("gonality is needed for genus >= 3 outside the generic case")
        return BoundInterval(gon, gon, True, ("eq:moving-curve-gonality", "hi:copies-of-the-curve"))
    if k > g:
        return BoundInterval(1, 1, True, ("eq:birational-to-jacobian-times-projective",))
    gon = p.known_gonality
    return BoundInterval(1, gon, gon == 1, ("hi:copies-of-the-curve",) if gon else (),
                         ("equality with the gonality is conjectural",))


class MovingGonality(NamedTuple):
    bound: int
    rigidity_applicable: bool
    note: str


def moving_gonality_lower(p: CurveProfile, trivial_automorphisms: Optional[bool] = None) -> MovingGonality:
    """Lower bound on the gonality of curves moving in a family covering ``C^(2)``.

    When ``g >= 6`` and ``Aut(C)`` is trivial, equality holds only for
    members isomorphic to ``C``.  Very general curves of genus ``>= 3`` have
    trivial automorphism group and hyperelliptic ones never do.
    """
    if p.genus < 3:
        raise BadParams("need genus >= 3")
    gon = p.known_gonality
    if gon is None:
        raise MissingGonality("gonality unknown")
    if p.curve_class == "very_general":
        trivial_automorphisms = True
    elif p.curve_class == "hyperelliptic":
        trivial_automorphisms = False
    applicable = p.genus >= 6 and bool(trivial_automorphisms)
    if applicable:
        note = "equality only for members isomorphic to C"
    elif p.genus < 6:
        note = "rigidity clause needs genus >= 6"
    else:
        note = "rigidity clause needs trivial automorphism group"
    return MovingGonality(gon, applicable, note)

