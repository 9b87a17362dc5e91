"""Integer invariants of curves: Brill-Noether numbers, gonality, classical bounds."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional

from .errors import AdvisoryWarning, BadParams, InconsistentProfile

__all__ = [
    "CURVE_CLASSES",
    "CurveProfile",
    "brill_noether_rho",
    "generic_min_degree",
    "generic_min_degree_scan",
    "generic_gonality",
    "CliffordBound",
    "clifford_max_dim",
    "martens_bound",
    "geometric_rr",
]

CURVE_CLASSES = ("very_general", "hyperelliptic", "non_hyperelliptic", "arbitrary")


def brill_noether_rho(g: int, r: int, d: int) -> int:
    """``g - (r+1)(g-d+r)``."""
    if min(g, r, d) < 0:
        raise BadParams("g, r, d must be non-negative")
    return g - (r + 1) * (g - d + r)


def generic_min_degree(g: int, r: int) -> int:
    """Least ``d`` with ``rho(g, r, d) >= 0``."""
    if g < 1 or r < 1:
        raise BadParams("need g >= 1 and r >= 1")
    return g + r - g // (r + 1)


def generic_min_degree_scan(g: int, r: int) -> int:
    """Brute-force twin of :func:`generic_min_degree`."""
    # rho(g, r, g + r) = g >= 0, so the scan always terminates there
    return next(d for d in range(0, g + r + 1) if brill_noether_rho(g, r, d) >= 0)


def generic_gonality(g: int) -> int:
    if g < 0:
        raise BadParams("genus must be non-negative")
    if g == 0:
        return 1
    if g == 1:
        return 2
    return (g + 3) // 2


class CliffordBound(NamedTuple):
    max_dim: int
    # what equality max_dim = deg/2 forces: "zero", "canonical", "hyperelliptic", or None
    boundary: Optional[str]


def clifford_max_dim(deg: int, g: Optional[int] = None) -> CliffordBound:
    """Clifford bound ``dim |D| <= deg/2`` for a special divisor of degree ``deg``."""
    if deg < 0:
        raise BadParams("degree must be non-negative")
    if g is not None and deg > 2 * g - 2 and deg != 0:
        raise BadParams("Clifford's bound concerns special divisors, deg <= 2g - 2")
    if deg % 2:
        boundary = None
    elif deg == 0:
        boundary = "zero"
    elif g is not None and deg == 2 * g - 2:
        boundary = "canonical"
    else:
        boundary = "hyperelliptic"
    return CliffordBound(deg // 2, boundary)


def martens_bound(m: int, r: int, g: Optional[int] = None, hyperelliptic: Optional[bool] = None) -> int:
    """Martens' bound ``dim W^r_m <= m - 2r - 1``.

    Negative means ``W^r_m`` is empty.  The bound is a theorem only for
    non-hyperelliptic curves of genus at least 5; outside that an
    :class:`AdvisoryWarning` is raised when the caller says so.
    """
    if m < 1 or r < 1:
        raise BadParams("need m >= 1 and r >= 1")
    if (g is not None and g < 5) or hyperelliptic:
        warnings.warn("Martens' bound used outside non-hyperelliptic genus >= 5", AdvisoryWarning,
                      stacklevel=2)
    return m - 2 * r - 1


def geometric_rr(deg: int, span_dim: int) -> int:
    """``dim |D| = deg - 1 - span_dim`` for a divisor on the canonical curve."""
    if not 0 <= span_dim <= deg - 1:
        raise BadParams("need 0 <= span_dim <= deg - 1")
    return deg - 1 - span_dim


@dataclass(frozen=True)
class CurveProfile:
    """What is known about a curve ``C`` of genus ``g``.

    ``delta`` maps ``m`` in ``{1, 2, 3}`` to the least degree of a birational
    map of ``C`` onto a non-degenerate curve of ``P^m`` (``delta[1]`` is the
    gonality).  A genus-2 profile of class ``very_general`` or ``arbitrary``
    is normalised to ``hyperelliptic``.
    """

    genus: int
    curve_class: str = "arbitrary"
    gonality: Optional[int] = None
    delta: Mapping[int, int] = field(default_factory=dict)
    elliptic_cover_degree: Optional[int] = None

    def __post_init__(self):
        g, cls = self.genus, self.curve_class
        object.__setattr__(self, "delta", dict(self.delta))
        if g < 0:
            raise InconsistentProfile("genus must be non-negative")
        if cls not in CURVE_CLASSES:
            raise InconsistentProfile(f"unknown curve class {cls!r}")
        if g == 2:
            if cls == "non_hyperelliptic":
                raise InconsistentProfile("every genus-2 curve is hyperelliptic")
            object.__setattr__(self, "curve_class", "hyperelliptic")
            cls = "hyperelliptic"
        if cls == "hyperelliptic" and g < 2:
            raise InconsistentProfile("hyperelliptic curves have genus >= 2")
        if cls == "non_hyperelliptic" and g < 3:
            raise InconsistentProfile("non-hyperelliptic curves have genus >= 3")
        if any(m not in (1, 2, 3) or v < 1 for m, v in self.delta.items()):
            raise InconsistentProfile("delta keys must be 1, 2, 3 with positive values")
        gon = self.gonality
        if gon is not None and 1 in self.delta and self.delta[1] != gon:
            raise InconsistentProfile("delta[1] is the gonality and must agree with it")
        if gon is not None and not 1 <= gon <= generic_gonality(g):
            raise InconsistentProfile(f"gonality {gon} impossible in genus {g}")
        if cls == "hyperelliptic" and self.known_gonality not in (None, 2):
            raise InconsistentProfile("hyperelliptic curves have gonality 2")
        if cls == "non_hyperelliptic" and self.known_gonality is not None and self.known_gonality < 3:
            raise InconsistentProfile("non-hyperelliptic curves have gonality >= 3")
        if cls == "very_general":
            if gon is not None and gon != generic_gonality(g):
                raise InconsistentProfile("a very general curve has the generic gonality")
            for m, v in self.delta.items():
                if g >= 1 and v != self.generic_delta(m):
                    raise InconsistentProfile(f"delta[{m}] differs from the generic value")
            if self.elliptic_cover_degree is not None:
                raise InconsistentProfile("a very general curve covers no elliptic curve")
        if self.elliptic_cover_degree is not None and self.elliptic_cover_degree < 2:
            raise InconsistentProfile("cover degree must be >= 2")

    def generic_delta(self, m: int) -> int:
        if m == 1:
            return generic_gonality(self.genus)
        return generic_min_degree(self.genus, m)

    @property
    def known_gonality(self) -> Optional[int]:
        """Gonality if supplied or forced by the class, else ``None``."""
        if self.gonality is not None:
            return self.gonality
        if 1 in self.delta:
            return self.delta[1]
        if self.curve_class == "hyperelliptic":
            return 2
        if self.curve_class == "very_general" or self.genus <= 1:
            return generic_gonality(self.genus)
        return None

    def known_delta(self) -> dict:
        """The ``delta_m`` values that are supplied or derivable."""
        out = dict(self.delta)
        gon = self.known_gonality
        if gon is not None:
            out[1] = gon
        if self.curve_class == "very_general" and self.genus >= 1:
            for m in (2, 3):
                out.setdefault(m, self.generic_delta(m))
        return out
