"""Exact integer/rational helpers and local symbols over Q.

Rationals are plain :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator.  Places of Q are
written as a prime ``int`` or the string ``"inf"``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

INF = "inf"

# |numerator|, denominator bound accepted from user input
INPUT_BOUND = 10**12


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-9/2"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division (n up to ~10^12)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n:
        for d in (p, p + 2):
            while n % d == 0:
                factors[d] = factors.get(d, 0) + 1
                n //= d
        p += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    if not isinstance(p, int) or p <= 2 or not is_prime(p):
        raise ValueError(f"legendre_symbol needs an odd prime, got p={p!r}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _squarefree_part(n: int) -> int:
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return sign * out


def squarefree_reduce(a) -> int:
    """Squarefree integer in the same class of Q*/(Q*)^2 as ``a``.

    >>> squarefree_reduce(12), squarefree_reduce(Fraction(9, 2))
    (3, 2)
    """
    a = as_rational(a)
    if a == 0:
        raise ValueError("squarefree_reduce: argument must be nonzero")
    # a = n/d and n*d differ by the square d^2
    num = _squarefree_part(a.numerator)
    den = _squarefree_part(a.denominator)
    return _squarefree_part(num * den)


def is_rational_square(a) -> bool:
    a = as_rational(a)
    if a < 0:
        return False
    n, d = a.numerator, a.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _place(place):
    if place == INF or (isinstance(place, float) and place == float("inf")):
        return INF
    if isinstance(place, str):
        if place.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        place = int(place)
    if not isinstance(place, int) or not is_prime(place):
        raise ValueError(f"place must be a prime or 'inf', got {place!r}")
    return place


def _integral_rep(a: Fraction) -> int:
    # a * den^2 lies in the same square class and is an integer
    return a.numerator * a.denominator


def hilbert_symbol(a, b, place) -> int:
    """Hilbert symbol (a, b)_v of two nonzero rationals at a place of Q.

    Returns +1 when x^2 - a y^2 - b z^2 has a nontrivial zero over the
    completion Q_v, else -1.
    """
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert_symbol: arguments must be nonzero")
    v = _place(place)
    if v == INF:
        return -1 if (a < 0 and b < 0) else 1
    a, b = _integral_rep(a), _integral_rep(b)
    alpha, beta = valuation(a, v), valuation(b, v)
    u, w = a // v**alpha, b // v**beta
    if v == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((v - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre_symbol(u, v)
    if alpha % 2:
        sign *= legendre_symbol(w, v)
    return sign


def relevant_places(a: int, b: int) -> list:
    """Places where (a, b)_v can be -1: 2, odd primes dividing ab, infinity."""
    odd = set(factorize(a)) | set(factorize(b))
    odd.discard(2)
    return [2, *sorted(odd), INF]
