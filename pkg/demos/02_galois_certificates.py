# Dedekind witness primes
#
# If P is squarefree mod p and has no root in GF(p), the Frobenius at p is a
# Galois element moving every root of P.  These primes are cheap to find and
# cheap to re-check.
from preperiodic import IntPolynomial, check_hypotheses, count_roots_mod_p, find_rootless_prime

for coeffs in ([1, 0, 1], [1, 0, 0, 0, 1], [-1, 0, 1], [-2, 0, 0, 1], [1, 1, 1, 1, 1]):
    P = IntPolynomial(coeffs)
    cert = find_rootless_prime(P, 1000)
    print(f"P = {P!s:<12} witness: {cert.p if cert else 'NONE'}")

# T^2 - 1 has rational roots, so it has a root modulo every prime
P = IntPolynomial([-1, 0, 1])
print([count_roots_mod_p(P, p) for p in (3, 5, 7, 11, 13)])

# degree and multiplicity conditions on P relative to d
print(check_hypotheses(IntPolynomial([1, 0, 1]), 2))
print(check_hypotheses(IntPolynomial([1, 0, 1]) ** 2, 2))
