"""Arithmetic in the small field F_q, q = p^e.

Elements are coded as integers in range(q): the base-p digits of the code,
low digit first, are the coefficients of the residue polynomial modulo a
fixed monic primitive polynomial m1 of degree e over F_p.  m1 is the
lexicographically least such polynomial (coefficients compared constant term
first), so codes are reproducible across runs.  For prime q the code of an
element is just the element itself as an integer mod p.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EnumerationTooLarge
from .numutil import prime_power

_TABLE_LIMIT = 2**20


def _digits(code: int, p: int, e: int) -> tuple[int, ...]:
    out = []
    for _ in range(e):
        out.append(code % p)
        code //= p
    return tuple(out)


def _code(digits, p: int) -> int:
    total = 0
    for d in reversed(list(digits)):
        total = total * p + d
    return total


class BaseField:
    """F_q with integer-coded elements; log tables built at construction."""

    def __init__(self, q: int):
        p, e = prime_power(q)
        if q > _TABLE_LIMIT:
            raise EnumerationTooLarge(f"base field of order {q} exceeds table budget")
        self.q, self.p, self.e = q, p, e
        self.modulus = self._least_primitive_modulus()
        self.pow_table, self.dlog_table = self._build_log_tables()
        # code of the residue class of y (the canonical generator of F_q^x)
        self.generator = self.pow_table[1 % (q - 1)]

    # --- construction -----------------------------------------------------

    def _poly_mul_mod(self, a: tuple, b: tuple, lower: tuple) -> tuple:
        """Multiply residue polynomials modulo y^e + lower (monic)."""
        p, e = self.p, self.e
        prod = [0] * (2 * e)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(2 * e - 1, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * lower[i]) % p
        return tuple(prod[:e])

    def _multiplicative_order_of_y(self, lower: tuple) -> int | None:
        """Order of the class of y in F_p[y]/(y^e + lower), or None."""
        p, e, q = self.p, self.e, self.q
        one = (1,) + (0,) * (e - 1)
        y = ((0, 1) + (0,) * (e - 2)) if e > 1 else ((-lower[0]) % p,)
        if y == one:
            return 1
        acc = y
        order = 1
        while acc != one:
            acc = self._poly_mul_mod(acc, y, lower) if e > 1 else ((acc[0] * y[0]) % p,)
            order += 1
            if order > q - 1:
                return None
        return order

    def _least_primitive_modulus(self) -> tuple[int, ...]:
        """Lex-least monic polynomial of degree e over F_p whose residue class
        of y has multiplicative order q - 1 (this forces irreducibility)."""
        p, e, q = self.p, self.e, self.q
        for key in range(q):
            lower = _digits(key, p, e)
            if lower[0] == 0:
                continue  # y would divide the modulus
            if self._multiplicative_order_of_y(lower) == q - 1:
                return lower + (1,)
        raise AssertionError("no primitive modulus found")

    def _build_log_tables(self):
        p, e, q = self.p, self.e, self.q
        lower = self.modulus[:e]
        if e == 1:
            g = (-lower[0]) % p
            pow_table = [1]
            for _ in range(q - 2):
                pow_table.append((pow_table[-1] * g) % p)
        else:
            y = (0, 1) + (0,) * (e - 2)
            acc = (1,) + (0,) * (e - 1)
            pow_table = []
            for _ in range(q - 1):
                pow_table.append(_code(acc, p))
                acc = self._poly_mul_mod(acc, y, lower)
        dlog: list[int | None] = [None] * q
        for j, c in enumerate(pow_table):
            dlog[c] = j
        return pow_table, dlog

    # --- arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (a + b) % p
        return _code(((x + y) % p for x, y in zip(_digits(a, p, e), _digits(b, p, e))), p)

    def neg(self, a: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (-a) % p
        return _code(((-x) % p for x in _digits(a, p, e)), p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        L = self.q - 1
        return self.pow_table[(self.dlog_table[a] + self.dlog_table[b]) % L]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        L = self.q - 1
        return self.pow_table[(-self.dlog_table[a]) % L]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 ** negative")
            return 0
        L = self.q - 1
        return self.pow_table[(self.dlog_table[a] * k) % L]

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def __repr__(self):
        return f"BaseField(q={self.q})"


@lru_cache(maxsize=None)
def base_field(q: int) -> BaseField:
    return BaseField(q)
