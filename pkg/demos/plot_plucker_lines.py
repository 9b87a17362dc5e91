"""
Lines in P^3 and their Plücker coordinates
------------------------------------------

Two lines meet exactly when the determinant of their stacked bases
vanishes, which is a bilinear pairing of their Plücker vectors.
"""
from symprod.linalg import format_rational
from symprod.projective import incidence_pairing, join, make_subspace, meet, plucker, plucker_relations_hold

l = make_subspace(3, [[1, 0, 0, 0], [0, 0, 1, 1]])
m = make_subspace(3, [[0, 1, 0, 0], [0, 0, 1, -1]])
n = make_subspace(3, [[1, 0, 0, 0], [0, 1, 0, 0]])

for name, s in (("l", l), ("m", m), ("n", n)):
    p = plucker(s)
    coords = {"".join(map(str, I)): format_rational(x) for I, x in p.as_dict().items()}
    print(name, coords, "relation holds:", plucker_relations_hold(p))

print("pairing(l, m) =", incidence_pairing(l, m))
print("pairing(l, n) =", incidence_pairing(l, n))

def rows(s):
    return [[format_rational(x) for x in r] for r in s.rows]


print("l meets n at", rows(meet(l, n)))
print("l and n span the plane", rows(join(l, n)))
