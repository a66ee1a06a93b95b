"""Small integer helpers: primality, factoring, prime powers, q-binomials."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .errors import NotPrimePower


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorisation as ((prime, exponent), ...)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, h) with q = p**h, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return f[0]


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


def square_free_split(n: int) -> tuple[int, int]:
    """Write n >= 0 as f*f*d with d squarefree; returns (f, d)."""
    if n == 0:
        return 0, 0
    f, d = 1, 1
    for p, e in factorize(n):
        f *= p ** (e // 2)
        if e % 2:
            d *= p
    return f, d


def qbinom(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient [n choose k]_q."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def multiplicative_order(a: int, m: int) -> int:
    if a % m == 0:
        return 0
    x, k = a % m, 1
    while x != 1:
        x = x * a % m
        k += 1
    return k
