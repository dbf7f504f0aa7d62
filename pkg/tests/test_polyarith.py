from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from preperiodic.polyarith import (
    IntPolynomial,
    count_roots_mod_p,
    eval_homogeneous,
    eval_rational,
    int_gcd,
    is_squarefree_mod_p,
    yun_squarefree,
)

T2P1 = IntPolynomial([1, 0, 1])
Tm1 = IntPolynomial([-1, 1])
Tp2 = IntPolynomial([2, 1])

polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).map(IntPolynomial).filter(
    lambda P: P.degree >= 1)


def test_representation():
    P = IntPolynomial([1, 2, 0, 0])
    assert P.coeffs == (1, 2) and P.degree == 1
    assert IntPolynomial([]).is_zero and IntPolynomial([]).degree == -1
    assert IntPolynomial.parse("1,0,1") == T2P1
    assert str(T2P1) == "1,0,1"
    with pytest.raises(ValueError):
        IntPolynomial.parse("1,x")


@pytest.mark.parametrize("P, t, expected", [
    (T2P1, Fraction(4, 3), Fraction(25, 9)),
    (T2P1, 0, 1),
    (IntPolynomial([0, -1, 0, 2]), Fraction(1, 2), Fraction(-1, 4)),
])
def test_eval_rational(P, t, expected):
    assert eval_rational(P, t) == expected


@pytest.mark.parametrize("P, r, s, expected", [
    (T2P1, 4, 3, 25),
    (T2P1, 1, 0, 1),
    (IntPolynomial([1, 2, 0, 1]), 2, 1, 13),
])
def test_eval_homogeneous(P, r, s, expected):
    # direct expansion oracle
    N = P.degree
    assert sum(c * r ** i * s ** (N - i) for i, c in enumerate(P.coeffs)) == expected
    assert eval_homogeneous(P, r, s) == expected


def test_eval_homogeneous_origin():
    with pytest.raises(ValueError):
        eval_homogeneous(T2P1, 0, 0)


@given(polys, st.integers(-50, 50), st.integers(-50, 50).filter(bool))
def test_homogeneous_dehomogenizes(P, r, s):
    assert eval_homogeneous(P, r, s) == s ** P.degree * eval_rational(P, Fraction(r, s))


@given(polys, st.integers(-30, 30), st.integers(-30, 30), st.integers(-9, 9))
def test_homogeneous_degree(P, r, s, lam):
    if (r, s) == (0, 0) or lam == 0:
        return
    assert eval_homogeneous(P, lam * r, lam * s) == lam ** P.degree * eval_homogeneous(P, r, s)


def test_yun_examples():
    assert yun_squarefree(Tm1 ** 2 * Tp2).factors == ((Tp2, 1), (Tm1, 2))
    assert yun_squarefree(T2P1).factors == ((T2P1, 1),)
    cube = T2P1 ** 3
    assert cube.coeffs == (1, 0, 3, 0, 3, 0, 1)
    assert yun_squarefree(cube).factors == ((T2P1, 3),)


def test_yun_constant_rejected():
    with pytest.raises(ValueError):
        yun_squarefree(IntPolynomial([5]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(polys, st.integers(1, 3)), min_size=1, max_size=3),
       st.integers(-6, 6).filter(bool))
def test_yun_reconstructs(parts, unit):
    P = IntPolynomial([unit])
    for f, m in parts:
        P = P * f ** m
    dec = yun_squarefree(P)
    assert dec.expand() == P
    mults = [m for _, m in dec.factors]
    assert mults == sorted(set(mults))
    for f, _ in dec.factors:
        assert f.degree >= 1
        assert int_gcd(f, f.derivative()).degree == 0
    for i, (f, _) in enumerate(dec.factors):
        for g, _ in dec.factors[i + 1:]:
            assert int_gcd(f, g).degree == 0


@pytest.mark.parametrize("P, p, expected", [
    (T2P1, 3, 0), (T2P1, 5, 2), (IntPolynomial([-1, 0, 1]), 7, 2),
])
def test_count_roots_examples(P, p, expected):
    assert count_roots_mod_p(P, p) == expected


def test_count_roots_lc_divisible():
    with pytest.raises(ValueError):
        count_roots_mod_p(IntPolynomial([1, 0, 3]), 3)


PRIMES_101 = [p for p in range(2, 102) if all(p % k for k in range(2, p))]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10**6, 10**6), min_size=2, max_size=9), st.sampled_from(PRIMES_101))
def test_count_roots_exhaustive(cs, p):
    P = IntPolynomial(cs)
    if P.degree < 1 or P.lc % p == 0:
        return
    brute = sum(1 for t in range(p) if sum(c * t ** i for i, c in enumerate(P.coeffs)) % p == 0)
    assert count_roots_mod_p(P, p) == brute


@pytest.mark.parametrize("P, p, expected", [
    (T2P1, 3, True), (Tm1 ** 2, 5, False), (T2P1, 2, False),
])
def test_squarefree_mod_p(P, p, expected):
    assert is_squarefree_mod_p(P, p) is expected


def test_squarefree_mod_p_derivative_vanishes():
    # T^5 + 1 = (T + 1)^5 mod 5
    assert is_squarefree_mod_p(IntPolynomial([1, 0, 0, 0, 0, 1]), 5) is False
