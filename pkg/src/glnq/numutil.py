"""Number-theoretic helpers: divisors, Moebius, prime powers, q-analogues."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import NotPrimePower


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, multiplicity), ...)."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius expects n >= 1")
    result = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p**e; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return fac[0]


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
        return True
    except NotPrimePower:
        return False


def prime_powers_ascending(start: int = 2):
    """Yield prime powers >= start in increasing order."""
    q = max(2, start)
    while True:
        if is_prime_power(q):
            yield q
        q += 1


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def qint(m: int, q):
    """[m]_q = 1 + q + ... + q^(m-1); works for integer or Fraction q."""
    total, power = 0, 1
    for _ in range(m):
        total += power
        power = power * q
    return total


def qfact(m: int, q):
    """[m]_q! = [1]_q [2]_q ... [m]_q."""
    result = 1
    for i in range(1, m + 1):
        result *= qint(i, q)
    return result


def qbinom(m: int, k: int, q):
    """Gaussian binomial coefficient; exact, valid at q = 1 as well."""
    if k < 0 or k > m:
        return 0
    value = Fraction(qfact(m, q)) / (Fraction(qfact(k, q)) * qfact(m - k, q))
    if value.denominator == 1:
        return int(value) if isinstance(q, int) else value
    return value


def lcm_many(values) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, v)
    return result
