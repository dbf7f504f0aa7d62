"""Parametric families ``x**d + 1/(w*P(t))`` checked over parameters of bounded height."""
from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from .certify import ObstructionCertificate, find_rootless_prime
from .dynamics import denominator_filter, find_portrait
from .exactnum import format_rational
from .polyarith import IntPolynomial, eval_rational

NO_PREPERIODIC = "NO_PREPERIODIC"
HAS_PREPERIODIC = "HAS_PREPERIODIC"
UNDEFINED_C = "UNDEFINED_C"

SURVEY_PRIME_BOUND = 1000


@dataclass(frozen=True)
class FamilySpec:
    d: int
    P: IntPolynomial
    w: int = 1
    certificate: Optional[ObstructionCertificate] = None
    experimental: bool = False

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.P.degree < 1:
            raise ValueError("P must have positive degree")
        if self.w == 0:
            raise ValueError("w must be nonzero")

    def to_dict(self) -> dict:
        return {"d": self.d, "poly": str(self.P), "w": str(self.w)}


def family_c(spec: FamilySpec, t) -> Optional[Fraction]:
    """c = 1/(w*P(t)), or ``None`` where P(t) = 0."""
    val = eval_rational(spec.P, t)
    if val == 0:
        return None
    return 1 / (spec.w * val)


def enumerate_t(H: int) -> list[Fraction]:
    """All rationals r/s in lowest terms with |r| <= H and 1 <= s <= H, ascending."""
    if H < 1:
        raise ValueError("height bound must be positive")
    out = [Fraction(r, s) for s in range(1, H + 1) for r in range(-H, H + 1)
           if math.gcd(abs(r), s) == 1]
    out.sort()
    return out


def ingram_family(d: int, m: int) -> tuple[FamilySpec, bool]:
    """The family ``x**d + 1/(1 + t**m)`` and whether Ingram's theorem covers it."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    applicable = (d % 2 == 0 and m >= 4) or (d % 3 == 0 and m >= 3)
    P = IntPolynomial([1] + [0] * (m - 1) + [1])
    return FamilySpec(d, P, 1, experimental=not applicable), applicable


@dataclass(frozen=True)
class SampleReport:
    t: Fraction
    c: Optional[Fraction]
    filter_passed: bool
    portrait_size: int
    verdict: str
    points: tuple = ()

    def to_dict(self) -> dict:
        return {
            "t": format_rational(self.t),
            "c": None if self.c is None else format_rational(self.c),
            "filter_passed": self.filter_passed,
            "portrait_size": self.portrait_size,
            "verdict": self.verdict,
            "points": [format_rational(x) for x in self.points],
        }


def sample(spec: FamilySpec, t) -> SampleReport:
    t = Fraction(t)
    c = family_c(spec, t)
    if c is None:
        return SampleReport(t, None, False, 0, UNDEFINED_C)
    if not denominator_filter(spec.d, c).passes:
        return SampleReport(t, c, False, 0, NO_PREPERIODIC)
    portrait = find_portrait(spec.d, c)
    if len(portrait) == 0:
        return SampleReport(t, c, True, 0, NO_PREPERIODIC)
    return SampleReport(t, c, True, len(portrait), HAS_PREPERIODIC, tuple(portrait.points))


def _sample_star(args):
    return sample(*args)


@dataclass
class VerificationSummary:
    family: FamilySpec
    H: int
    total: int = 0
    no_preperiodic: int = 0
    has_preperiodic: int = 0
    undefined_c: int = 0
    witnesses: list = field(default_factory=list)
    filter_passed: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "family": self.family.to_dict(),
            "H": self.H,
            "total": self.total,
            "no_preperiodic": self.no_preperiodic,
            "has_preperiodic": self.has_preperiodic,
            "undefined_c": self.undefined_c,
            "witnesses": [r.to_dict() for r in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationSummary":
        fam = data["family"]
        spec = FamilySpec(int(fam["d"]), IntPolynomial.parse(fam["poly"]), int(fam["w"]))
        wit = []
        for r in data["witnesses"]:
            wit.append(SampleReport(
                Fraction(r["t"]), Fraction(r["c"]), r["filter_passed"], r["portrait_size"],
                r["verdict"], tuple(Fraction(x) for x in r["points"])))
        return cls(spec, int(data["H"]), int(data["total"]), int(data["no_preperiodic"]),
                   int(data["has_preperiodic"]), int(data["undefined_c"]), wit)


def verify_family(spec: FamilySpec, H: int, jobs: int = 1) -> VerificationSummary:
    """Run the exhaustive finder at every parameter of height <= H.

    Reports are reduced in enumeration order, so the summary does not
    depend on ``jobs``.
    """
    ts = enumerate_t(H)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_sample_star, ((spec, t) for t in ts),
                                    chunksize=max(1, len(ts) // (4 * jobs))))
    else:
        reports = [sample(spec, t) for t in ts]

    summary = VerificationSummary(spec, H)
    for rep in reports:
        summary.total += 1
        if rep.verdict == NO_PREPERIODIC:
            summary.no_preperiodic += 1
        elif rep.verdict == UNDEFINED_C:
            summary.undefined_c += 1
        else:
            summary.has_preperiodic += 1
            summary.witnesses.append(rep)
        if rep.filter_passed:
            summary.filter_passed.append(rep.t)
    return summary


# ------------------------------------------------------------------ Galois survey

def _random_poly(rng: random.Random, N: int, H: int) -> IntPolynomial:
    coeffs = [rng.randint(-H, H) for _ in range(N)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-H, H)
    return IntPolynomial(coeffs + [lead])


def survey_galois(N: int, H: int, samples: int, seed=0) -> float:
    """Fraction of random degree-N polynomials of height <= H with a Dedekind witness prime."""
    if N < 2 or samples < 1:
        raise ValueError("need N >= 2 and samples >= 1")
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        P = _random_poly(rng, N, H)
        if find_rootless_prime(P, SURVEY_PRIME_BOUND) is not None:
            hits += 1
    return hits / samples


def census_galois(N: int, H: int, monic: bool = False) -> tuple[int, int]:
    """Exhaustive count ``(certified, total)`` over all degree-N polynomials of height <= H."""
    leads = [1] if monic else [a for a in range(-H, H + 1) if a]
    hits = total = 0
    for lower in product(range(-H, H + 1), repeat=N):
        for lead in leads:
            total += 1
            if find_rootless_prime(IntPolynomial(list(lower) + [lead]), SURVEY_PRIME_BOUND):
                hits += 1
    return hits, total


def survey_trend(N: int, heights, samples: int, seed=0) -> list[tuple[int, float]]:
    return [(H, survey_galois(N, H, samples, seed)) for H in heights]
