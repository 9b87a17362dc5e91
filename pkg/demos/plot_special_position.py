"""
Deciding special position
-------------------------

A pencil of lines is special (every line meeting all but one meets the
last), a triangle is not.  Each verdict carries a certificate that can be
re-checked independently.
"""
from symprod.special_position import check_span_bound, decide, gen_fixture, verify_certificate

for family, params in (("pencil", dict(d=3, n=3)), ("triangle", {}),
                       ("quadric_ruling", dict(d=4)), ("random_skew", dict(d=4, n=3, seed=7)),
                       ("scroll", dict(d=5))):
    c = gen_fixture(family, **params)
    cert = decide(c, trials=200, seed=0)
    span = check_span_bound(c)
    print(f"{family:15s} {cert.verdict:12s} verified={verify_certificate(c, cert)} "
          f"span={span.span_dim} bound={span.bound}")

tri = gen_fixture("triangle")
cert = decide(tri)
print("triangle witness line:", [[str(x) for x in r] for r in cert.witness.rows],
      "misses side", cert.excluded_index)

# five lines in P^3 are outside the witness search tiers
print("five skew lines:", decide(gen_fixture("random_skew", d=5, n=3, seed=2), trials=20).verdict)
