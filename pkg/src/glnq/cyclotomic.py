"""Exact sums of roots of unity with rational coefficients.

A CyclotomicSum with modulus M represents sum_a c_a * zeta_M^a where zeta_M is
the fixed primitive M-th root of unity exp(2*pi*i/M).  Terms are kept as a
sparse exponent -> coefficient map with no canonical reduction modulo
cyclotomic relations; rationality questions are settled exactly by reducing
the defining polynomial modulo the relevant cyclotomic polynomial, and a
certified floating-point evaluation is available for display and fast
comparisons.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import NotRational
from .numutil import divisors

APPROX_BOUND_SCALE = 2.0 ** -40
_EXACT_MODULUS_LIMIT = 200_000


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return (-1, 1)
    # (x^m - 1) divided by the product of Phi_d for proper divisors d
    poly = [0] * m + [1]
    poly[0] = -1
    for d in divisors(m):
        if d == m:
            continue
        poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_divide_exact(num, den):
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    dlead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        coeff = num[shift + len(den) - 1]
        if coeff % dlead != 0:
            raise ArithmeticError("inexact polynomial division")
        c = coeff // dlead
        out[shift] = c
        if c:
            for i, dc in enumerate(den):
                num[shift + i] -= c * dc
    if any(num):
        raise ArithmeticError("nonzero remainder in exact division")
    return out


def _poly_mod(num, den):
    """Remainder of num modulo monic integer polynomial den; num has Fraction
    or int coefficients (low degree first)."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + dd]
        if c:
            for i in range(dd):
                num[shift + i] -= c * den[i]
            num[shift + dd] = 0
    while len(num) > 1 and not num[-1]:
        num.pop()
    return num


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CyclotomicSum:
    """Exact element of Q(zeta_M) written as a sparse sum of roots of unity."""

    __slots__ = ("modulus", "terms")

    def __init__(self, modulus: int, terms=None):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        clean: dict[int, object] = {}
        if terms:
            for a, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    a %= modulus
                    acc = clean.get(a, 0) + c
                    if acc:
                        clean[a] = _norm_coeff(acc)
                    else:
                        clean.pop(a, None)
        self.terms = clean

    # --- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, modulus: int) -> "CyclotomicSum":
        return cls(modulus)

    @classmethod
    def root(cls, modulus: int, exponent: int, coeff=1) -> "CyclotomicSum":
        return cls(modulus, {exponent % modulus: coeff})

    @classmethod
    def integer(cls, modulus: int, value) -> "CyclotomicSum":
        return cls(modulus, {0: value})

    # --- ring operations --------------------------------------------------

    def _lift(self, modulus: int) -> "CyclotomicSum":
        if modulus == self.modulus:
            return self
        if modulus % self.modulus != 0:
            raise ValueError("can only lift to a multiple modulus")
        step = modulus // self.modulus
        return CyclotomicSum(modulus, {a * step: c for a, c in self.terms.items()})

    @staticmethod
    def _common(x: "CyclotomicSum", y: "CyclotomicSum"):
        m = lcm(x.modulus, y.modulus)
        return x._lift(m), y._lift(m)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicSum.integer(self.modulus, other)
        a, b = self._common(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            acc = terms.get(e, 0) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return CyclotomicSum(a.modulus, terms)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicSum(self.modulus, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicSum.integer(self.modulus, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CyclotomicSum(self.modulus)
            return CyclotomicSum(self.modulus,
                                 {a: c * other for a, c in self.terms.items()})
        a, b = self._common(self, other)
        terms: dict[int, object] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = (e1 + e2) % a.modulus
                acc = terms.get(e, 0) + c1 * c2
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        return CyclotomicSum(a.modulus, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return self * Fraction(1, other)
        if isinstance(other, Fraction):
            return self * (1 / other)
        raise TypeError("can only divide by a rational scalar")

    def conjugate(self) -> "CyclotomicSum":
        return CyclotomicSum(self.modulus,
                             {(-a) % self.modulus: c for a, c in self.terms.items()})

    # --- structure ---------------------------------------------------------

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(not isinstance(c, Fraction) or c.denominator == 1
                   for c in self.terms.values())

    def shrink(self) -> "CyclotomicSum":
        """Rewrite with the smallest modulus supporting all exponents."""
        if not self.terms:
            return CyclotomicSum(1)
        g = self.modulus
        for a in self.terms:
            g = gcd(g, a)
            if g == 1:
                return self
        return CyclotomicSum(self.modulus // g,
                             {a // g: c for a, c in self.terms.items()})

    def is_zero(self) -> bool:
        s = self.shrink()
        if not s.terms:
            return True
        if s.modulus > _EXACT_MODULUS_LIMIT:
            # certified numeric fast path: far from zero means surely nonzero
            if abs(s.approx()) > s.approx_bound():
                return False
        try:
            return s._reduced_constant() == 0
        except NotRational:
            return False

    def _poly(self):
        coeffs = [0] * self.modulus
        for a, c in self.terms.items():
            coeffs[a] = c
        return coeffs

    def _is_rational(self) -> bool:
        try:
            self._reduced_constant()
            return True
        except NotRational:
            return False

    def _reduced_constant(self):
        """Rational value of this sum, assuming modulus is already shrunk."""
        if not self.terms:
            return Fraction(0)
        if self.modulus == 1:
            return Fraction(sum(self.terms.values()))
        rem = _poly_mod(self._poly(), cyclotomic_polynomial(self.modulus))
        if len(rem) > 1:
            raise NotRational(f"not a rational value (modulus {self.modulus})")
        return Fraction(rem[0]) if rem else Fraction(0)

    def to_fraction(self) -> Fraction:
        """Exact rational value; raises NotRational when there is none."""
        return self.shrink()._reduced_constant()

    def to_int(self) -> int:
        value = self.to_fraction()
        if value.denominator != 1:
            raise NotRational(f"value {value} is not an integer")
        return int(value)

    # --- numeric view -------------------------------------------------------

    def approx(self) -> complex:
        total = 0j
        for a, c in self.terms.items():
            total += float(c) * cmath.exp(2j * cmath.pi * a / self.modulus)
        return total

    def approx_bound(self) -> float:
        """Certified bound on |approx() - exact value|."""
        l1 = sum(abs(float(c)) for c in self.terms.values())
        return l1 * APPROX_BOUND_SCALE

    # --- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicSum.integer(self.modulus, other)
        if not isinstance(other, CyclotomicSum):
            return NotImplemented
        if self.modulus == other.modulus and self.terms == other.terms:
            return True
        return (self - other).is_zero()

    def __hash__(self):
        s = self.shrink()
        return hash((s.modulus, tuple(sorted((a, Fraction(c)) for a, c in s.terms.items()))))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if not self.terms:
            return "CyclotomicSum(0)"
        parts = [f"{c}*z{self.modulus}^{a}" for a, c in sorted(self.terms.items())]
        return "CyclotomicSum(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        value = self.approx()
        return {
            "modulus": self.modulus,
            "terms": [[a, str(c)] for a, c in sorted(self.terms.items())],
            "approx": [value.real, value.imag],
        }
