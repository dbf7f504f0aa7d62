"""Certificates for families ``x**d + 1/(w*P(t))``.

Three pieces:

* :func:`check_hypotheses` -- degree divisible by ``d`` and every root of
  multiplicity at most ``d - 1``.
* :func:`find_rootless_prime` -- a prime ``p`` at which the radical of ``P`` is
  squarefree with no root in GF(p).  By Dedekind's theorem the Frobenius at
  ``p`` then acts on the roots without fixed points.
* :func:`local_solvability` / :func:`find_w` -- search for a twist ``w`` such
  that ``y**d = w*Q(r, s)`` has no point over Q_p, where
  ``Q(r, s) = s**N * P(r/s)``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exactnum import int_valuation, primes_up_to, split_valuation
from .polyarith import (
    IntPolynomial,
    count_roots_mod_p,
    eval_homogeneous,
    is_squarefree_mod_p,
    yun_squarefree,
)

NO_POINTS = "NO_POINTS"
POINT_FOUND = "POINT_FOUND"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class HypothesisReport:
    N: int
    degree_ok: bool
    max_multiplicity: int
    multiplicity_ok: bool
    radical: Optional[IntPolynomial] = None

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.multiplicity_ok

    def to_dict(self) -> dict:
        return {"N": self.N, "degree_ok": self.degree_ok, "max_multiplicity": self.max_multiplicity}


def check_hypotheses(P: IntPolynomial, d: int) -> HypothesisReport:
    if P.degree < 1:
        raise ValueError("P must have positive degree")
    if d < 2:
        raise ValueError("d must be at least 2")
    sqf = yun_squarefree(P)
    mm = sqf.max_multiplicity
    return HypothesisReport(P.degree, P.degree % d == 0, mm, mm <= d - 1, sqf.radical())


@dataclass(frozen=True)
class GaloisCertificate:
    p: int
    root_count: int = 0
    squarefree_mod_p: bool = True
    lc_ok: bool = True

    def to_dict(self) -> dict:
        return {"p": self.p, "root_count": self.root_count,
                "squarefree_mod_p": self.squarefree_mod_p, "lc_ok": self.lc_ok}

    @classmethod
    def from_dict(cls, data: dict) -> "GaloisCertificate":
        return cls(int(data["p"]), int(data["root_count"]),
                   bool(data["squarefree_mod_p"]), bool(data["lc_ok"]))


def _is_rootless_admissible(radical: IntPolynomial, p: int) -> bool:
    return (radical.lc % p != 0
            and is_squarefree_mod_p(radical, p)
            and count_roots_mod_p(radical, p) == 0)


def rootless_primes(P: IntPolynomial, bound: int):
    """Ascending admissible primes ``p <= bound`` where the radical of P has no root."""
    radical = yun_squarefree(P).radical()
    for p in primes_up_to(bound):
        if _is_rootless_admissible(radical, p):
            yield p


def find_rootless_prime(P: IntPolynomial, bound: int) -> Optional[GaloisCertificate]:
    """Smallest Dedekind witness prime up to ``bound``, or ``None``."""
    if P.degree < 1:
        raise ValueError("P must have positive degree")
    for p in rootless_primes(P, bound):
        return GaloisCertificate(p)
    return None


def verify_galois_certificate(P: IntPolynomial, cert: GaloisCertificate) -> bool:
    """Re-check a certificate by evaluating the radical at every residue mod p."""
    radical = yun_squarefree(P).radical()
    p = cert.p
    if radical.lc % p == 0 or not is_squarefree_mod_p(radical, p):
        return False
    cs = radical.mod(p)
    return all(sum(c * pow(t, i, p) for i, c in enumerate(cs)) % p for t in range(p))


# ------------------------------------------------------------------ p-adic powers

@lru_cache(maxsize=None)
def _unit_dth_powers(p: int, d: int, modulus: int) -> frozenset:
    return frozenset(pow(x, d, modulus) for x in range(modulus) if x % p)


def is_unit_dth_power(u0: int, p: int, d: int) -> bool:
    """Whether a p-adic unit (given by an integer representative) is a d-th power.

    Decided modulo ``p**(2e+1)``, ``e = v_p(d)``: by the strong form of Hensel's
    lemma any solution there lifts.
    """
    if u0 % p == 0:
        raise ValueError("not a p-adic unit")
    e = int_valuation(d, p)
    if e == 0:
        g = math.gcd(d, p - 1)
        return pow(u0 % p, (p - 1) // g, p) == 1
    modulus = p ** (2 * e + 1)
    return u0 % modulus in _unit_dth_powers(p, d, modulus)


def is_dth_power_in_Qp(u, p: int, d: int) -> bool:
    """Whether a nonzero rational ``u`` lies in ``(Q_p^*)^d``."""
    u = Fraction(u)
    if u == 0:
        raise ValueError("zero is handled separately by callers")
    va, a = split_valuation(u.numerator, p)
    vb, b = split_valuation(u.denominator, p)
    if (va - vb) % d:
        return False
    e = int_valuation(d, p)
    modulus = p ** (2 * e + 1)
    return is_unit_dth_power(a * pow(b, -1, modulus) % modulus, p, d)


def _dth_root_mod(u0: int, p: int, d: int) -> Optional[int]:
    """Some x with x**d = u0 mod p**(2e+1), by exhaustion (small moduli only)."""
    modulus = p ** (2 * int_valuation(d, p) + 1)
    if modulus > 10**6:
        return None
    target = u0 % modulus
    for x in range(1, modulus):
        if x % p and pow(x, d, modulus) == target:
            return x
    return None


# ------------------------------------------------------------------ local solvability

@dataclass(frozen=True)
class LocalSolvability:
    status: str
    p: int
    explored_depth: int
    # (r, s, y, k): w*Q(r, s) = y**d holds for a Q_p point whose (r, s) are
    # congruent to the given residues modulo p**k; y is given to the precision used.
    witness: Optional[tuple] = None


def local_solvability(d: int, w: int, P: IntPolynomial, p: int, max_depth: int) -> LocalSolvability:
    """Decide whether ``y**d = w*Q(r, s)`` has a Q_p point, up to a depth limit.

    Residue classes of primitive pairs ``(r, s)`` are refined modulo ``p**k``.
    Because ``d | N`` rescaling by a unit changes ``Q`` by a d-th power, so it
    is enough to walk the two projective charts ``(r, 1)`` and ``(1, p*s')``.
    A class whose valuation is already determined is killed when that valuation
    is not divisible by ``d``, or settled by the unit d-th power test once the
    unit part is known modulo ``p**(2e+1)``; otherwise it is refined.
    """
    if w == 0:
        raise ValueError("twist w must be nonzero")
    if P.degree < 1 or P.degree % d:
        raise ValueError("local_solvability needs d | deg P")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    vw, w0 = split_valuation(w, p)
    need = 2 * int_valuation(d, p) + 1

    # chart A: (r, 1), r mod p;  chart B: (1, s), s = 0 mod p
    live = [(r, 1) for r in range(p)] + [(1, 0)]
    k = 1
    depth = 1
    while True:
        depth = k
        modulus = p ** k
        survivors = []
        for r, s in live:
            q = eval_homogeneous(P, r, s)
            if q % modulus == 0:
                survivors.append((r, s))
                continue
            vq, uq = split_valuation(q, p)
            v = vw + vq
            if v % d:
                continue
            if k - vq >= need:
                unit = w0 * uq
                if is_unit_dth_power(unit, p, d):
                    y0 = _dth_root_mod(unit, p, d)
                    y = None if y0 is None else p ** (v // d) * y0
                    return LocalSolvability(POINT_FOUND, p, depth, (r, s, y, k))
                continue
            survivors.append((r, s))
        if not survivors:
            return LocalSolvability(NO_POINTS, p, depth)
        if k == max_depth:
            return LocalSolvability(UNKNOWN, p, depth)
        step = modulus
        live = []
        for r, s in survivors:
            if s % p:
                live.extend((r + i * step, s) for i in range(p))
            else:
                live.extend((r, s + j * step) for j in range(p))
        k += 1


# ------------------------------------------------------------------ w search

@dataclass(frozen=True)
class ObstructionCertificate:
    w: int
    p: int
    solvability: LocalSolvability
    hypothesis: HypothesisReport

    @property
    def status(self) -> str:
        return self.solvability.status

    @property
    def depth(self) -> int:
        return self.solvability.explored_depth

    def to_dict(self) -> dict:
        return {"w": str(self.w), "p": self.p, "depth": self.depth,
                "hypotheses": self.hypothesis.to_dict(), "status": self.status}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ObstructionCertificate":
        h = data["hypotheses"]
        report = HypothesisReport(int(h["N"]), bool(h["degree_ok"]), int(h["max_multiplicity"]),
                                  multiplicity_ok=True)
        p = int(data["p"])
        return cls(int(data["w"]), p, LocalSolvability(data["status"], p, int(data["depth"])), report)

    @classmethod
    def from_json(cls, text: str) -> "ObstructionCertificate":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Unknown:
    """Outcome of a bounded search that found nothing; not an error."""
    reason: str
    status: str = UNKNOWN

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"status": self.status, "reason": self.reason}


def verify_prime_twist(P: IntPolynomial, cert: ObstructionCertificate) -> bool:
    """Direct check for ``w = p``: v_p(w*Q(r, s)) = 1 on every primitive pair mod p."""
    p, w = cert.p, cert.w
    if w != p:
        return False
    return all(
        int_valuation(w * eval_homogeneous(P, r, s), p) == 1
        for r in range(p) for s in range(p) if r % p or s % p
    )


def _small_units(p: int, limit: int = 5):
    for u in range(1, limit + 1):
        if u % p:
            yield u
            yield -u


def find_w(P: IntPolynomial, d: int, prime_bound: int = 100, max_depth: int = 4):
    """Search for a twist ``w`` with a local obstruction at some prime.

    Witness primes ``p`` of the Galois certificate are tried first as
    ``w = p``; then ``w = u * p**j`` for ``j < d`` and small units ``u`` at
    every prime up to ``prime_bound``.  Returns an
    :class:`ObstructionCertificate` or an :class:`Unknown`.
    """
    hyp = check_hypotheses(P, d)
    if not hyp.degree_ok:
        return Unknown(f"degree {hyp.N} is not a multiple of {d}")
    if not hyp.multiplicity_ok:
        return Unknown(f"a root has multiplicity {hyp.max_multiplicity} > {d - 1}")
    witnesses = list(rootless_primes(P, prime_bound))
    if not witnesses:
        return Unknown(f"no Galois certificate among primes <= {prime_bound}")

    tried = set()
    for p in witnesses:
        tried.add((p, p))
        sol = local_solvability(d, p, P, p, max_depth)
        if sol.status == NO_POINTS:
            return ObstructionCertificate(p, p, sol, hyp)
    for p in primes_up_to(prime_bound):
        for j in range(d):
            for u in _small_units(p):
                w = u * p ** j
                if (w, p) in tried:
                    continue
                tried.add((w, p))
                sol = local_solvability(d, w, P, p, max_depth)
                if sol.status == NO_POINTS:
                    return ObstructionCertificate(w, p, sol, hyp)
    return Unknown(f"no obstruction found for primes <= {prime_bound} at depth {max_depth}")
