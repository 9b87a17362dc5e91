"""
Slope certificates for the nef cone
-----------------------------------

Starting from tau = 9/4 in genus 5, each step certifies a bound for the
next genus by showing a quadratic has no integer root m >= 2.
"""
from fractions import Fraction

from symprod.nefcone import default_gonality_constant, search_min_ratio, verify_tau_certificate

tau = Fraction(9, 4)
for g, b_max in ((6, 13), (7, 29), (8, 6)):
    c = default_gonality_constant(g)
    a, b, report = search_min_ratio(g, c, tau, b_max)
    A, B, C = report.quadratic
    print(f"g={g}: tau <= {a}/{b}  L^2={report.l_squared}  f(m)={A}m^2{B:+d}m{C:+d}  disc={report.discriminant}")
    tau = Fraction(a, b)

print(verify_tau_certificate(6, 29, 13, Fraction(9, 4), 4).failed_check)
