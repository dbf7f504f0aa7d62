"""Exact integer/rational helpers.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``,
which is always stored in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def iroot(n: int, d: int) -> tuple[int, bool]:
    """Integer d-th root of ``n``.

    Returns ``(root, exact)`` where ``root = floor(n ** (1/d))`` for ``n >= 0``
    and ``-floor(|n| ** (1/d))`` for negative ``n`` with odd ``d``;
    ``exact`` is true iff ``root ** d == n``.

    >>> iroot(25, 2)
    (5, True)
    >>> iroot(-8, 3)
    (-2, True)
    """
    if d < 1:
        raise ValueError("root degree must be positive")
    if n < 0:
        if d % 2 == 0:
            raise ValueError("even root of a negative integer")
        r, exact = iroot(-n, d)
        return -r, exact
    if n < 2 or d == 1:
        return n, True
    # Newton from above: start at a power of two >= the true root.
    x = 1 << -(-n.bit_length() // d)
    while True:
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    while x ** d > n:
        x -= 1
    while (x + 1) ** d <= n:
        x += 1
    return x, x ** d == n


def is_perfect_power(n: int, d: int) -> bool:
    if n < 0 and d % 2 == 0:
        return False
    return iroot(n, d)[1]


def int_valuation(n: int, p: int) -> float | int:
    """Exponent of ``p`` in the integer ``n`` (``math.inf`` for zero)."""
    if n == 0:
        return math.inf
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(q, p: int) -> float | int:
    """p-adic valuation of a rational: v_p(num) - v_p(den), ``inf`` at zero."""
    q = Fraction(q)
    if q == 0:
        return math.inf
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def split_valuation(n: int, p: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``n = p**v * u`` and ``p`` not dividing ``u``."""
    if n == 0:
        raise ValueError("zero has no unit part")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1 or exp < 0:
        raise ValueError("need modulus >= 1 and exp >= 0")
    return pow(base, exp, modulus)


def primes_up_to(bound: int) -> Iterator[int]:
    """Ascending primes ``p <= bound`` (sieve of Eratosthenes)."""
    if bound < 2:
        return
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, bound + 1, i)))
    for i, flag in enumerate(sieve):
        if flag:
            yield i


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    return all(n % k for k in range(17, math.isqrt(n) + 1, 2))


def small_prime_factor_with_residue(n: int, d: int, limit: int = 10**6):
    """First prime q <= limit with v_q(n) not divisible by d, by trial division.

    Returns ``(q, v_q(n) % d)`` or ``None`` when no such prime is found below
    the limit (the cofactor may still be a non-power).
    """
    n = abs(n)
    q = 2
    while q <= limit and q * q <= n:
        if n % q == 0:
            v, n = split_valuation(n, q)
            if v % d:
                return q, v % d
        q += 1 if q == 2 else 2
    if n > 1 and q * q > n:
        # cofactor is prime
        return n, 1
    return None


def parse_rational(text: str) -> Fraction:
    """Parse the ``num/den`` wire format (plain integers allowed)."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    return str(Fraction(q))


def naive_height(q) -> int:
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)
