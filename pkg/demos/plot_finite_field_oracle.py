"""
Brute force over a finite field
-------------------------------

Over GF(q) every line of P^3 can be listed, one reduced echelon matrix
per line.  The count is the Gaussian binomial [4 choose 2]_q.
"""
from symprod.projective import gaussian_binomial
from symprod.special_position import ffield_census, gen_fixture, reduce_mod

for q in (2, 3, 5, 7):
    print(f"q={q}: {gaussian_binomial(4, 2, q)} lines in P^3")

for family in ("pencil", "triangle"):
    c = gen_fixture(family, **(dict(d=3, n=3) if family == "pencil" else {}))
    for q in (3, 5):
        special, checked = ffield_census(reduce_mod(c, q))
        print(f"{family} mod {q}: special={special} after {checked} lines")
