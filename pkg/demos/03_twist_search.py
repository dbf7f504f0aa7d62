# Searching for the twist w
#
# For the curve y^d = w * Q(r, s), Q(r, s) = s^N P(r/s), we walk residue
# classes of primitive (r, s) modulo growing powers of p.  A class dies when
# the p-adic valuation of w*Q is known and not divisible by d, or when its
# unit part is provably not a d-th power.
from preperiodic import IntPolynomial, find_w, local_solvability

P = IntPolynomial([1, 0, 1])
print(local_solvability(2, 3, P, 3, 4))   # NO_POINTS at depth 1
print(local_solvability(2, 1, P, 3, 4))   # POINT_FOUND: (0, 1) gives y = 1
print(local_solvability(2, 3, P, 5, 4))   # 3 * 2 = 6 is a square in Q_5

cert = find_w(P, 2, prime_bound=100, max_depth=4)
print(cert.to_json())

print(find_w(IntPolynomial([1, 0, 0, 0, 1]), 4).to_json())
print(find_w(IntPolynomial([-1, 0, 1]), 2))   # no Galois certificate: UNKNOWN
