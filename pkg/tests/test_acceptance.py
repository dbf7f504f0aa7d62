"""Exit criteria for the package, one test per criterion."""
import math
import random
import time
from fractions import Fraction as F

import pytest

from oracles import (
    brute_force_portrait,
    is_dth_power_oracle,
    reduced_fractions,
    roots_mod_p_exhaustive,
)
from preperiodic.certify import (
    NO_POINTS,
    find_rootless_prime,
    find_w,
    is_dth_power_in_Qp,
)
from preperiodic.dynamics import denominator_filter, escape_bound, find_portrait
from preperiodic.families import (
    FamilySpec,
    ingram_family,
    sample,
    survey_galois,
    verify_family,
)
from preperiodic.polyarith import IntPolynomial, eval_homogeneous

T2P1 = IntPolynomial([1, 0, 1])
T4P1 = IntPolynomial([1, 0, 0, 0, 1])


def _portrait_map(p):
    return {x: (p.edges[x], p.tail[x], p.cycle[x]) for x in p.points}


def test_1_portrait_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    checked = mismatches = 0
    for d in (2, 3):
        for c in reduced_fractions(30, 30):
            checked += 1
            if _portrait_map(find_portrait(d, c)) != brute_force_portrait(d, c, M=200, steps=50,
                                                                           cutoff=10**6):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    criterion(1, "portrait oracle equivalence", mismatches == 0 and elapsed < 300,
              f"{checked} maps, {mismatches} mismatches, {elapsed:.1f}s")


def test_2_known_portraits(criterion):
    expected = {
        (2, F(0)): {-1, 0, 1},
        (2, F(-1)): {-1, 0, 1},
        (2, F(-2)): {-2, -1, 0, 1, 2},
        (2, F(1, 4)): {F(-1, 2), F(1, 2)},
        (3, F(0)): {-1, 0, 1},
    }
    bad = []
    for (d, c), pts in expected.items():
        oracle = set(brute_force_portrait(d, c))
        got = set(find_portrait(d, c).points)
        if not (got == pts == oracle):
            bad.append((d, c))
    criterion(2, "known-portrait regression", not bad, f"failures: {bad}" if bad else "5/5")


@pytest.mark.parametrize("d, m", [(2, 4), (2, 5), (3, 3), (6, 3)])
def test_3_ingram_families(criterion, d, m):
    spec, applicable = ingram_family(d, m)
    t0 = time.perf_counter()
    s = verify_family(spec, 50)
    elapsed = time.perf_counter() - t0
    ok = applicable and s.has_preperiodic == 0 and elapsed < 120
    criterion(3, f"Ingram family d={d}, m={m}, height <= 50", ok,
              f"{s.total} t, {s.has_preperiodic} with preperiodic points, {elapsed:.1f}s")


def test_4_constructive_demo(criterion):
    cert = find_w(T2P1, 2, 100, 4)
    first = bool(cert) and (cert.w, cert.p, cert.status, cert.depth) == (3, 3, NO_POINTS, 1)
    spec = FamilySpec(2, T2P1, 3, certificate=cert if cert else None)
    s = verify_family(spec, 50)
    rep = sample(spec, F(4, 3))
    pinned = (rep.c == F(3, 25) and rep.filter_passed and denominator_filter(2, rep.c).b == 5
              and len(find_portrait(2, rep.c)) == 0 and rep.verdict == "NO_PREPERIODIC")
    cert4 = find_w(T4P1, 4, 100, 4)
    quartic = bool(cert4) and (cert4.w, cert4.p, cert4.status) == (3, 3, NO_POINTS)
    ok = first and s.has_preperiodic == 0 and F(4, 3) in s.filter_passed and pinned and quartic
    criterion(4, "twist w=3 for T^2+1 and T^4+1, family verified to height 50", ok,
              f"{s.total} t, {len(s.filter_passed)} passed the filter, "
              f"{s.has_preperiodic} with preperiodic points")


def _direct_valuation_check(P, w, p):
    for r in range(p):
        for s_ in range(p):
            if r == 0 and s_ == 0:
                continue
            val = w * eval_homogeneous(P, r, s_)
            v = 0
            while val and val % p == 0:
                val //= p
                v += 1
            if val == 0 or v != 1:
                return False
    return True


def test_5_certificate_soundness(criterion):
    rng = random.Random(5)
    galois_bad = galois_n = 0
    twist_bad = twist_n = 0
    for _ in range(300):
        N = rng.choice([2, 3, 4, 6])
        cs = [rng.randint(-30, 30) for _ in range(N)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        # family polynomials are primitive; the depth-1 valuation check presumes it
        P = IntPolynomial(cs).primitive_part()
        cert = find_rootless_prime(P, 1000)
        if cert is not None:
            galois_n += 1
            g = math.gcd(*P.coeffs)
            if roots_mod_p_exhaustive([c // g for c in P.coeffs], cert.p) != 0:
                galois_bad += 1
        d = rng.choice([k for k in (2, 3, 4, 6) if N % k == 0])
        ob = find_w(P, d, 30, 3)
        if ob and ob.w == ob.p:
            twist_n += 1
            if not _direct_valuation_check(P, ob.w, ob.p):
                twist_bad += 1

    power_bad = power_n = 0
    for p in (2, 3, 5, 7):
        for d in (2, 3, 4):
            for _ in range(1000):
                a = rng.choice([-1, 1]) * rng.randint(1, 200)
                b = rng.randint(1, 200)
                u = F(a, b)
                power_n += 1
                if is_dth_power_in_Qp(u, p, d) != is_dth_power_oracle(u, p, d, precision=5):
                    power_bad += 1
    ok = galois_bad == twist_bad == power_bad == 0 and galois_n > 0 and twist_n > 0
    criterion(5, "certificate soundness", ok,
              f"galois {galois_bad}/{galois_n}, prime twists {twist_bad}/{twist_n}, "
              f"p-adic powers {power_bad}/{power_n}")


def _is_dth_power_int(n, d):
    r = round(n ** (1.0 / d))
    return any((r + k) ** d == n for k in (-1, 0, 1) if r + k >= 0)


def test_6_filter_finder_consistency(criterion):
    rng = random.Random(6)
    fail_bad = fail_n = 0
    while fail_n < 1000:
        d = rng.choice([2, 3, 4, 5])
        den = rng.randint(2, 10**6)
        if _is_dth_power_int(den, d):
            continue
        num = rng.randint(-10**6, 10**6)
        c = F(num, den)
        if c == 0 or _is_dth_power_int(c.denominator, d):
            continue
        fail_n += 1
        if denominator_filter(d, c).passes or len(find_portrait(d, c)) != 0:
            fail_bad += 1

    shape_bad = 0
    nonempty = 0
    for i in range(1000):
        d = rng.choice([2, 3, 4, 5])
        if i % 3 == 1:
            b = rng.randint(1, 12)
            c = F(rng.randint(-50 * b ** d, 50 * b ** d), b ** d)
        elif i % 3 == 2:
            # c = x - x^d makes x a fixed point
            b = rng.randint(1, 6)
            x = F(rng.randint(-3 * b, 3 * b), b)
            c = x - x ** d
        else:
            c = F(rng.randint(-200, 200), rng.randint(1, 200))
        p = find_portrait(d, c)
        if len(p):
            nonempty += 1
            b = round(c.denominator ** (1.0 / d))
            B = escape_bound(c)
            if any(x.denominator != b or abs(x) > B for x in p.points):
                shape_bad += 1
    criterion(6, "filter/finder consistency", fail_bad == 0 and shape_bad == 0,
              f"filter-fail discrepancies {fail_bad}/{fail_n}, "
              f"shape violations {shape_bad}/1000 ({nonempty} nonempty)")


def test_7_galois_survey(criterion):
    rows = []
    ok = True
    for H in (10, 100, 1000):
        a = survey_galois(4, H, 500, seed=2024)
        b = survey_galois(4, H, 500, seed=2024)
        ok &= a == b and 0.0 <= a <= 1.0
        rows.append(f"H={H}: {a:.3f}")
    print("survey trend (N=4, 500 samples, seed 2024): " + ", ".join(rows))
    criterion(7, "Galois survey determinism/range", ok, "; ".join(rows))


def test_8_determinism_under_parallelism(criterion):
    specs = [FamilySpec(2, T2P1, 3), FamilySpec(2, IntPolynomial([0, 1])), ingram_family(3, 3)[0]]
    same = True
    for spec in specs:
        one = verify_family(spec, 12, jobs=1).to_json()
        four = verify_family(spec, 12, jobs=4).to_json()
        same &= one == four
    criterion(8, "verify_family byte-identical for jobs 1 and 4", same)
