"""Rational preperiodic points of x^d + c and families without them."""
from .certify import (
    GaloisCertificate,
    HypothesisReport,
    LocalSolvability,
    ObstructionCertificate,
    check_hypotheses,
    find_rootless_prime,
    find_w,
    is_dth_power_in_Qp,
    local_solvability,
)
from .dynamics import (
    Portrait,
    candidate_set,
    denominator_filter,
    escape_bound,
    find_portrait,
    is_preperiodic,
)
from .exactnum import iroot, mod_pow, parse_rational, primes_up_to, valuation
from .families import (
    FamilySpec,
    enumerate_t,
    family_c,
    ingram_family,
    survey_galois,
    verify_family,
)
from .polyarith import (
    IntPolynomial,
    count_roots_mod_p,
    eval_homogeneous,
    eval_rational,
    is_squarefree_mod_p,
    yun_squarefree,
)

__version__ = "0.1.0"
