"""Univariate polynomials over Z, Q and GF(p).

Coefficients are stored in ascending order: ``coeffs[i]`` multiplies ``T**i``.
Integer polynomials are wrapped in :class:`IntPolynomial`; the Q[T] and GF(p)[T]
helpers below work on bare lists (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse ``"c0,c1,...,cN"`` (ascending coefficients)."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(not p.lstrip("+-").isdigit() for p in parts):
            raise ValueError(f"malformed polynomial: {text!r}")
        return cls(int(p) for p in parts)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self) -> "IntPolynomial":
        """Divide by the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def mod(self, p: int) -> list[int]:
        return _trim([c % p for c in self.coeffs])


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def eval_rational(P: IntPolynomial, t) -> Fraction:
    """Exact value P(t) at a rational point (Horner)."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * t + c
    return acc


def eval_homogeneous(P: IntPolynomial, r: int, s: int) -> int:
    """Q(r, s) = s**N * P(r/s) = sum c_i r^i s^(N-i), N = deg P."""
    if r == 0 and s == 0:
        raise ValueError("homogeneous form is not evaluated at (0, 0)")
    N = P.degree
    acc = 0
    # Horner in r with s-weights: ((c_N r + c_{N-1} s) r + c_{N-2} s^2) ...
    spow = 1
    for c in reversed(P.coeffs):
        acc = acc * r + c * spow
        spow *= s
    return acc if N >= 0 else 0


# ---------------------------------------------------------------- Q[T]

def _q_divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
        a.pop()
        _trim(a)
    return q, a


def _q_monic(a: list) -> list:
    return [x / a[-1] for x in a] if a else []


def _q_gcd(a: list, b: list) -> list:
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _q_divmod(a, b)[1]
    return _q_monic(a)


def _q_derivative(a: list) -> list:
    return _trim([i * x for i, x in enumerate(a) if i])


def _q_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _to_primitive_int(a: list) -> IntPolynomial:
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (Fraction(x).denominator for x in a), 1)
    return IntPolynomial(int(Fraction(x) * den) for x in a).primitive_part()


def int_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[T] with positive leading coefficient."""
    g = _q_gcd(list(a.coeffs), list(b.coeffs))
    if not g:
        return IntPolynomial([])
    return _to_primitive_int(g)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b in Z[T]; raises if b does not divide a exactly."""
    q, r = _q_divmod(list(a.coeffs), list(b.coeffs))
    if r or any(x.denominator != 1 for x in q):
        raise ArithmeticError("inexact polynomial division")
    return IntPolynomial(int(x) for x in q)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``P = unit * prod(factor ** mult)`` with squarefree, pairwise coprime factors.

    Factors are primitive with positive leading coefficient, listed by
    increasing multiplicity; ``unit`` carries the content and sign of P.
    """
    unit: int
    factors: tuple[tuple[IntPolynomial, int], ...]

    @property
    def max_multiplicity(self) -> int:
        return max((m for _, m in self.factors), default=0)

    def radical(self) -> IntPolynomial:
        return reduce(lambda x, y: x * y, (f for f, _ in self.factors), IntPolynomial([1]))

    def expand(self) -> IntPolynomial:
        out = IntPolynomial([self.unit])
        for f, m in self.factors:
            out = out * f ** m
        return out


def yun_squarefree(P: IntPolynomial) -> SquarefreeDecomposition:
    """Yun's squarefree decomposition of a non-constant integer polynomial."""
    if P.degree < 1:
        raise ValueError("squarefree decomposition needs deg P >= 1")
    f = [Fraction(c) for c in P.primitive_part().coeffs]
    df = _q_derivative(f)
    a = _q_gcd(f, df)
    b = _q_divmod(f, a)[0]
    c = _q_divmod(df, a)[0]
    dd = _q_sub(c, _q_derivative(b))
    factors = []
    i = 1
    while len(b) > 1:
        a = _q_gcd(b, dd)
        if len(a) > 1:
            factors.append((_to_primitive_int(a), i))
        b = _q_divmod(b, a)[0]
        c = _q_divmod(dd, a)[0]
        dd = _q_sub(c, _q_derivative(b))
        i += 1
    prod = IntPolynomial([1])
    for g, m in factors:
        prod = prod * g ** m
    unit = P.lc // prod.lc
    return SquarefreeDecomposition(unit, tuple(factors))


# ---------------------------------------------------------------- GF(p)[T]

def _mod_trim(cs: list, p: int) -> list:
    return _trim([c % p for c in cs])


def _mod_divmod(a: list, b: list, p: int) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv % p
        q[k] = f
        if f:
            for i, y in enumerate(b):
                a[i + k] = (a[i + k] - f * y) % p
        a.pop()
        _trim(a)
    return q, a


def _mod_gcd(a: list, b: list, p: int) -> list:
    a, b = _mod_trim(a, p), _mod_trim(b, p)
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _mod_mulmod(a: list, b: list, m: list, p: int) -> list:
    return _mod_divmod(_mod_trim(_mul(a, b), p), m, p)[1]


def _x_pow_mod(e: int, m: list, p: int) -> list:
    """X**e modulo m over GF(p), by square-and-multiply."""
    result = _mod_divmod([1], m, p)[1]
    base = _mod_divmod([0, 1], m, p)[1]
    while e:
        if e & 1:
            result = _mod_mulmod(result, base, m, p)
        base = _mod_mulmod(base, base, m, p)
        e >>= 1
    return result


def _require_unit_lc(P: IntPolynomial, p: int) -> list:
    if P.degree < 0 or P.lc % p == 0:
        raise ValueError(f"prime {p} divides the leading coefficient; choose another prime")
    return P.mod(p)


def count_roots_mod_p(P: IntPolynomial, p: int) -> int:
    """Number of distinct roots of P in GF(p), as deg gcd(X^p - X, P mod p)."""
    f = _require_unit_lc(P, p)
    if len(f) == 1:
        return 0
    xp = _x_pow_mod(p, f, p)
    g = _mod_gcd(f, _q_sub_mod(xp, [0, 1], p), p)
    return len(g) - 1


def _q_sub_mod(a: list, b: list, p: int) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_squarefree_mod_p(P: IntPolynomial, p: int) -> bool:
    """True iff gcd(P mod p, P' mod p) is constant."""
    f = _require_unit_lc(P, p)
    df = _mod_trim([i * c for i, c in enumerate(f) if i], p)
    if not df:
        # P' == 0 mod p: P is a p-th power unless constant
        return len(f) <= 1
    return len(_mod_gcd(f, df, p)) == 1
