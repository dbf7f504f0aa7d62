# Families x^d + 1/(w P(t)) at every t of bounded height
#
# The certificate is evidence for the whole family; each sampled t is still
# checked with the exhaustive finder.  t = 4/3 is the interesting one for
# P = T^2 + 1, w = 3: c = 3/25 passes the denominator filter, and only the
# full candidate search rules out preperiodic points.
from fractions import Fraction

from preperiodic import IntPolynomial, find_w
from preperiodic.families import FamilySpec, ingram_family, sample, verify_family

P = IntPolynomial([1, 0, 1])
spec = FamilySpec(2, P, 3, certificate=find_w(P, 2))
summary = verify_family(spec, 50)
print(summary.to_json())
print("filter passed at:", [str(t) for t in summary.filter_passed])
print(sample(spec, Fraction(4, 3)))

for d, m in [(2, 4), (2, 5), (3, 3), (6, 3), (5, 4)]:
    spec, applicable = ingram_family(d, m)
    s = verify_family(spec, 30)
    print(f"d={d} m={m} applicable={applicable}: {s.has_preperiodic} parameters with preperiodic points")

# a family that is not of the certified shape finds preperiodic points quickly
s = verify_family(FamilySpec(2, IntPolynomial([0, 1])), 4)
print([(str(r.t), str(r.c)) for r in s.witnesses])
