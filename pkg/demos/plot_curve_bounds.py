"""
Gonality and degree of irrationality tables
-------------------------------------------

Intervals for the degree of irrationality of the symmetric square of a
curve, by genus and curve class.
"""
from symprod.curves import CurveProfile, generic_gonality, generic_min_degree
from symprod.irrationality import deg_gonality, degirr_interval

print(" g  gon  d2  d3   degirr(vg)  degirr(hyp)")
for g in range(0, 16):
    vg = degirr_interval(CurveProfile(g, "very_general"))
    hyp = degirr_interval(CurveProfile(g, "hyperelliptic")) if g >= 2 else vg
    d2 = generic_min_degree(g, 2) if g else "-"
    d3 = generic_min_degree(g, 3) if g else "-"
    print(f"{g:2d}  {generic_gonality(g):3d}  {d2!s:>2}  {d3!s:>2}   [{vg.lo}, {vg.hi}]".ljust(30)
          + f"[{hyp.lo}, {hyp.hi}]")

b = deg_gonality(CurveProfile(9, "very_general"))
print("degree of gonality, very general genus 9:", b.lo, "exact" if b.exact else "")
