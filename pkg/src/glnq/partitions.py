"""Partitions, symmetric-group character values, and n-cycle product counts.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().  Character values come from the Murnaghan-Nakayama rule
implemented on beta-numbers, with an independent closed formula for hook
shapes used as a cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InexactResult, SizeMismatch
from .numutil import binom

Partition = tuple

__all__ = [
    "as_partition", "partitions_of", "z_of", "conjugate", "multiplicities",
    "partial_sums", "scale", "mn_character", "hook_char_on_ncycle",
    "char_on_near_ncycle", "hook_char_explicit", "ncycle_product_count",
    "ncycle_product_count_explicit", "hook_dimension",
]


def as_partition(parts) -> Partition:
    """Normalize a part sequence: drop zeros, sort decreasing, validate."""
    cleaned = tuple(sorted((int(p) for p in parts if int(p) != 0), reverse=True))
    if any(p < 0 for p in cleaned):
        raise ValueError(f"negative part in {parts!r}")
    return cleaned


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def z_of(mu: Partition) -> int:
    """Centralizer order of a permutation of cycle type mu."""
    z = 1
    for i, m in multiplicities(mu).items():
        z *= i**m * math.factorial(m)
    return z


def multiplicities(mu: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in mu:
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= i) for i in range(1, mu[0] + 1))


def partial_sums(mu: Partition) -> tuple[int, ...]:
    """s_i(mu) = mu_1 + ... + mu_i for i = 1..len(mu)."""
    out, total = [], 0
    for p in mu:
        total += p
        out.append(total)
    return tuple(out)


def scale(d: int, mu: Partition) -> Partition:
    """The partition (d*mu_1, d*mu_2, ...)."""
    return tuple(d * p for p in mu)


# --- Murnaghan-Nakayama rule --------------------------------------------------

def _beta_numbers(lam: Partition, slots: int) -> tuple[int, ...]:
    return tuple(lam[i] + (slots - 1 - i) if i < len(lam) else (slots - 1 - i)
                 for i in range(slots))


def _partition_from_betas(betas) -> Partition:
    betas = sorted(betas, reverse=True)
    slots = len(betas)
    return as_partition(b - (slots - 1 - i) for i, b in enumerate(betas))


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on the class of cycle type mu, |lam| = |mu|."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    slots = max(len(lam), 1)
    betas = set(_beta_numbers(lam, slots))
    total = 0
    for b in sorted(betas, reverse=True):
        if b - t >= 0 and b - t not in betas:
            # height of the removed border strip = #betas strictly inside (b-t, b)
            height = sum(1 for c in betas if b - t < c < b)
            new_betas = (betas - {b}) | {b - t}
            total += (-1) ** height * mn_character(_partition_from_betas(new_betas), rest)
    return total


def hook_char_on_ncycle(n: int, lam: Partition) -> int:
    """chi^lam on an n-cycle: (-1)^r for hooks (n-r, 1^r), else 0."""
    lam = as_partition(lam)
    if sum(lam) != n or n < 1:
        raise SizeMismatch(f"|{lam}| != {n}")
    if lam[0] + len(lam) - 1 == n:
        return (-1) ** (len(lam) - 1)
    return 0


def char_on_near_ncycle(n: int, lam: Partition) -> int:
    """chi^lam on the class of cycle type (n-1, 1), for n >= 3."""
    if n < 3:
        raise SizeMismatch("need n >= 3")
    lam = as_partition(lam)
    if sum(lam) != n:
        raise SizeMismatch(f"|{lam}| != {n}")
    if lam == (n,):
        return 1
    if lam == (1,) * n:
        return (-1) ** n
    # shapes (n-r, 2, 1^(r-2)) for r in {2, ..., n-2}
    if len(lam) >= 2 and lam[1] == 2 and all(p == 1 for p in lam[2:]):
        r = len(lam)
        if 2 <= r <= n - 2 and lam[0] == n - r:
            return (-1) ** (r - 1)
    return 0


def _gbinom(a: int, k: int) -> int:
    """Generalized binomial a(a-1)...(a-k+1)/k!, valid for negative a."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= a - i
    return num // math.factorial(k)


def hook_char_explicit(n: int, r: int, mu: Partition) -> int:
    """Closed formula for chi^{(n-r, 1^r)}_mu via sub-partition binomials.

    Independent of the MN recursion; used as an oracle in tests.  The first
    binomial is the generalized one (its top argument can be -1 when mu has
    no part equal to 1).
    """
    mu = as_partition(mu)
    if sum(mu) != n or not 0 <= r <= n - 1:
        raise SizeMismatch("bad hook parameters")
    m_mu = multiplicities(mu)
    total = 0
    for nu in partitions_of(r):
        m_nu = multiplicities(nu)
        sign = (-1) ** sum(m for i, m in m_nu.items() if i % 2 == 0)
        term = sign * _gbinom(m_mu.get(1, 0) - 1, m_nu.get(1, 0))
        for j in range(2, r + 1):
            term *= binom(m_mu.get(j, 0), m_nu.get(j, 0))
        total += term
    return total


def hook_dimension(n: int, r: int) -> int:
    """Degree of chi^{(n-r, 1^r)}: binom(n-1, r)."""
    return binom(n - 1, r)


# --- n-cycle factorization counts ---------------------------------------------

def ncycle_product_count(n: int, k: int, mu: Partition) -> int:
    """Number of k-tuples of n-cycles in S_n whose product lies in class mu.

    Hook-sum formula: the count per target element is
    (n-1)!^(k-1)/n * sum_r (-1)^(rk) chi^{(n-r,1^r)}_mu / binom(n-1,r)^(k-1),
    scaled by the class size n!/z_mu.
    """
    mu = as_partition(mu)
    if sum(mu) != n or k < 1:
        raise SizeMismatch("mu must partition n and k >= 1")
    acc = Fraction(0)
    for r in range(n):
        chi = mn_character(as_partition((n - r,) + (1,) * r), mu)
        acc += Fraction((-1) ** (r * k) * chi, binom(n - 1, r) ** (k - 1))
    per_element = Fraction(math.factorial(n - 1) ** (k - 1), n) * acc
    total = per_element * Fraction(math.factorial(n), z_of(mu))
    if total.denominator != 1:
        raise InexactResult(f"non-integer n-cycle count {total}")
    return int(total)


def ncycle_product_count_explicit(n: int, k: int, mu: Partition) -> int:
    """Same count via the explicit hook-value formula (independent route)."""
    mu = as_partition(mu)
    if sum(mu) != n or k < 1:
        raise SizeMismatch("mu must partition n and k >= 1")
    acc = Fraction(0)
    for r in range(n):
        acc += Fraction((-1) ** (r * k), binom(n - 1, r) ** (k - 1)) \
            * hook_char_explicit(n, r, mu)
    per_element = Fraction(math.factorial(n - 1) ** (k - 1), n) * acc
    total = per_element * Fraction(math.factorial(n), z_of(mu))
    if total.denominator != 1:
        raise InexactResult(f"non-integer n-cycle count {total}")
    return int(total)
