"""The ambient field tower F_{q^N} with a fixed, reproducible generator.

The ambient degree is N = lcm(1, ..., n): every subfield F_{q^d} needed for
degrees d <= n embeds because d | N, and the unit-group order M = q^N - 1 is
vastly smaller than the q^(n!) - 1 a naive tower would use.

The generator eps is pinned deterministically: the ambient field is
F_p[x]/(m(x)) for the lexicographically least monic primitive polynomial m of
degree e*N over F_p (coefficients compared constant term first), and eps is
the residue class of x, optionally twisted by a power coprime to M to force a
chosen irreducible to vanish at a subfield generator.

Unit elements are carried around as exponents of eps.  Per-degree "layers"
hold power/dlog tables for F_{q^d} in a polynomial basis, which is what makes
addition (and hence root finding for ell_f) cheap: the tables have size
q^d - 1, never M.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .basefield import BaseField, base_field
from .cyclotomic import CyclotomicSum
from .errors import (DegreeOutOfRange, FieldTooLarge, InvalidInput,
                     NotInSubfield, NotIrreducible, ZeroInput)
from .numutil import prime_factors, prime_power
from .polys import Poly, pdeg, poly_to_str, require_irreducible

DEFAULT_FIELD_BUDGET = 2**24

CACHE_ENV = "GLNQ_CACHE"


@dataclass(frozen=True)
class FieldElem:
    """Element of the ambient field: eps^exponent, or zero."""

    exponent: int | None  # None encodes 0

    @property
    def is_zero(self) -> bool:
        return self.exponent is None


ZERO = FieldElem(None)


# --- arithmetic in F_p[x] (dense tuples over F_p, low degree first) -------------

def _amb_mul(a, b, lower, p, D):
    prod = [0] * (2 * D)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(2 * D - 1, D - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(D):
                prod[k - D + i] = (prod[k - D + i] - c * lower[i]) % p
    return tuple(prod[:D])


def _amb_pow(base, exp, lower, p, D):
    result = (1,) + (0,) * (D - 1)
    acc = base
    while exp:
        if exp & 1:
            result = _amb_mul(result, acc, lower, p, D)
        acc = _amb_mul(acc, acc, lower, p, D)
        exp >>= 1
    return result


def _amb_gcd_with_modulus(a, modulus, p):
    """gcd of the polynomial a (tuple, may be shorter) with the full modulus."""
    def trim(v):
        v = list(v)
        while v and v[-1] == 0:
            v.pop()
        return v

    f, g = trim(modulus), trim(a)
    while g:
        inv = pow(g[-1], p - 2, p) if p > 2 else 1
        while len(f) >= len(g):
            c = (f[-1] * inv) % p
            shift = len(f) - len(g)
            for i, gc in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gc) % p
            f = trim(f)
            if not f:
                break
        f, g = g, f
    return f


def _is_irreducible_modulus(lower, p, D):
    """Irreducibility of x^D + lower over F_p by the distinct-degree sieve:
    gcd(x^(p^i) - x, m) is trivial for all i <= D/2 iff m is irreducible."""
    if D == 1:
        return True
    x = (0, 1) + (0,) * (D - 2)
    modulus = lower + (1,)
    u = x
    for _ in range(D // 2):
        u = _amb_pow(u, p, lower, p, D)
        diff = tuple((ui - xi) % p for ui, xi in zip(u, x))
        if any(diff) and len(_amb_gcd_with_modulus(diff, modulus, p)) > 1:
            return False
        if not any(diff):
            return False  # every element is fixed: m splits over a subfield
    return True


def _is_primitive_modulus(lower, p, D, M):
    if not _is_irreducible_modulus(lower, p, D):
        return False
    one = (1,) + (0,) * (D - 1)
    x = ((0, 1) + (0,) * (D - 2))[:D] if D > 1 else ((-lower[0]) % p,)
    for r in prime_factors(M):
        if _amb_pow(x, M // r, lower, p, D) == one:
            return False
    return True


def _primitive_roots_mod_p(p: int) -> set[int]:
    out = set()
    for g in range(1, p):
        order, acc = 1, g
        while acc != 1:
            acc = acc * g % p
            order += 1
        if order == p - 1:
            out.add(g)
    return out


@lru_cache(maxsize=None)
def _find_ambient_modulus(p: int, e: int, N: int) -> tuple[int, ...]:
    """Lex-least monic primitive polynomial of degree e*N over F_p."""
    D = e * N
    M = p**D - 1
    cached = _load_cached_modulus(p, e, N)
    if cached is not None:
        return cached
    from itertools import product
    # the norm of a primitive root is a primitive root of F_p, so the constant
    # term is restricted to (-1)^D * (a primitive root); this prunes whole
    # blocks of the lexicographic scan
    sign = 1 if D % 2 == 0 else -1
    good_c0 = {(sign * g) % p for g in _primitive_roots_mod_p(p)}
    for c0 in range(p):
        if c0 not in good_c0:
            continue
        for rest in product(range(p), repeat=D - 1):
            coeffs = (c0,) + rest
            if _is_primitive_modulus(coeffs, p, D, M):
                modulus = coeffs + (1,)
                _store_cached_modulus(p, e, N, modulus)
                return modulus
    raise AssertionError("no primitive polynomial found")


def _cache_path(p, e, N):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"glnq_field_p{p}_e{e}_N{N}.json")


def _load_cached_modulus(p, e, N):
    path = _cache_path(p, e, N)
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
        modulus = tuple(int(c) for c in data["modulus"])
    except (OSError, KeyError, ValueError, json.JSONDecodeError):
        return None
    D = e * N
    if len(modulus) != D + 1 or modulus[-1] != 1:
        return None
    if not _is_primitive_modulus(modulus[:D], p, D, p**D - 1):
        return None
    return modulus


def _store_cached_modulus(p, e, N, modulus):
    path = _cache_path(p, e, N)
    if not path:
        return
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            json.dump({"p": p, "e": e, "N": N,
                       "modulus": list(modulus)}, fh)
    except OSError:
        pass


# --- per-degree subfield layers ---------------------------------------------------

class SubfieldLayer:
    """Tables for F_{q^d} in the polynomial basis of the minimal polynomial of
    eps_d over F_p.  Codes are base-p digit integers."""

    def __init__(self, p: int, ed: int, minpoly: tuple[int, ...], order: int):
        self.p, self.ed, self.minpoly, self.order = p, ed, minpoly, order
        lower = minpoly[:ed]
        pow_table = []
        acc = (1,) + (0,) * (ed - 1)
        y = ((0, 1) + (0,) * (ed - 2))[:ed] if ed > 1 else ((-lower[0]) % p,)
        for _ in range(order):
            pow_table.append(self._encode(acc))
            acc = _amb_mul(acc, y, lower, p, ed)
        if self._encode(acc) != 1:
            raise AssertionError("generator order mismatch in subfield layer")
        dlog: list[int | None] = [None] * p**ed
        for j, c in enumerate(pow_table):
            if dlog[c] is not None:
                raise AssertionError("collision in subfield dlog table")
            dlog[c] = j
        self.pow_table, self.dlog = pow_table, dlog

    def _encode(self, digits) -> int:
        total = 0
        for d in reversed(list(digits)):
            total = total * self.p + d
        return total

    def _decode(self, code: int):
        out = []
        for _ in range(self.ed):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def add_codes(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._encode((x + y) % self.p
                            for x, y in zip(self._decode(a), self._decode(b)))

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.pow_table[(self.dlog[a] + self.dlog[b]) % self.order]

    def zech(self, a: int) -> int | None:
        """Exponent z with 1 + eps_d^a = eps_d^z, or None when the sum is 0."""
        code = self.add_codes(1, self.pow_table[a % self.order])
        return self.dlog[code] if code else None


class FieldCtx:
    """Ambient field F_{q^N} with generator eps and subfield layers d <= n."""

    def __init__(self, q: int, n: int, budget: int = DEFAULT_FIELD_BUDGET,
                 twist: int = 1):
        p, e = prime_power(q)
        if n < 1:
            raise InvalidInput("n must be positive")
        N = 1
        for d in range(2, n + 1):
            N = lcm(N, d)
        M = q**N - 1
        if M > budget:
            raise FieldTooLarge(f"unit group order {M} exceeds budget {budget}")
        if gcd(twist, M) != 1:
            raise InvalidInput("generator twist must be a unit mod M")
        self.q, self.p, self.e, self.n, self.N, self.M = q, p, e, n, N, M
        self.budget = budget
        self.twist = twist
        self.base: BaseField = base_field(q)
        self.modulus = _find_ambient_modulus(p, e, N)
        self.layers: dict[int, SubfieldLayer] = {}
        self._ell_cache: dict[Poly, int] = {}
        D = e * N
        lower = self.modulus[:D]
        for d in range(1, n + 1):
            T = (M // (q**d - 1)) * twist
            beta = _amb_pow(((0, 1) + (0,) * (D - 2))[:D] if D > 1
                            else ((-lower[0]) % p,), T, lower, p, D)
            minpoly = self._minpoly_over_fp(beta, e * d)
            self.layers[d] = SubfieldLayer(p, e * d, minpoly, q**d - 1)
        self._embed_exp = self._find_embedding()

    # --- construction helpers ----------------------------------------------

    def _minpoly_over_fp(self, beta, degree):
        p, D = self.p, self.e * self.N
        lower = self.modulus[:D]
        conj = beta
        # poly in Y with ambient coefficients, low degree first; start with 1
        poly = [(1,) + (0,) * (D - 1)]
        zero = (0,) * D
        for _ in range(degree):
            shifted = [zero] + poly
            scaled = [_amb_mul(conj, c, lower, p, D) for c in poly] + [zero]
            poly = [tuple((a - b) % p for a, b in zip(s, t))
                    for s, t in zip(shifted, scaled)]
            conj = _amb_pow(conj, p, lower, p, D)
        if conj != beta:
            raise AssertionError("conjugate orbit did not close")
        out = []
        for c in poly:
            if any(c[1:]):
                raise AssertionError("minimal polynomial not over F_p")
            out.append(c[0])
        assert out[-1] == 1 and len(out) == degree + 1
        return tuple(out)

    def _find_embedding(self) -> int:
        """Exponent j0 with iota(g1) = eps_1^j0 for the base-field generator g1,
        fixing the field embedding F_q -> F_{q^N} used for coefficients."""
        layer = self.layers[1]
        m1 = self.base.modulus  # degree-e polynomial over F_p
        roots = []
        for j in range(self.q - 1):
            acc = 0
            u = layer.pow_table[j]
            for c in reversed(m1):
                acc = layer.add_codes(layer.mul_codes(acc, u), c % self.p)
            if acc == 0:
                roots.append(j)
        if not roots:
            raise AssertionError("base modulus has no root in layer 1")
        j0 = min(roots)
        assert gcd(j0, self.q - 1) == 1 or self.q == 2
        return j0

    # --- embeddings -----------------------------------------------------------

    def embed_exponent(self, code: int, d: int) -> int | None:
        """Exponent j with iota(code) = eps_d^j, or None for code 0."""
        if code == 0:
            return None
        j1 = self.base.dlog_table[code]
        L = self.q**d - 1
        return (j1 * self._embed_exp * (L // (self.q - 1))) % L

    def ambient_exponent(self, code: int) -> int | None:
        """Ambient dlog of an embedded base-field code."""
        j = self.embed_exponent(code, 1)
        if j is None:
            return None
        return j * (self.M // (self.q - 1)) % self.M

    def element(self, code: int) -> FieldElem:
        """Ambient element for a base-field code."""
        exp = self.ambient_exponent(code)
        return ZERO if exp is None else FieldElem(exp)

    # --- spec surface -----------------------------------------------------------

    def subfield_generator(self, d: int) -> FieldElem:
        if not 1 <= d <= self.n:
            raise DegreeOutOfRange(f"d = {d} outside 1..{self.n}")
        return FieldElem(self.M // (self.q**d - 1) % self.M)

    def theta(self, x: FieldElem) -> CyclotomicSum:
        if x.is_zero:
            raise ZeroInput("theta is undefined at 0")
        return CyclotomicSum.root(self.M, x.exponent)

    def theta_n(self, x: FieldElem) -> int:
        if x.is_zero:
            raise ZeroInput("theta_n is undefined at 0")
        T = self.M // (self.q**self.n - 1)
        if x.exponent % T:
            raise NotInSubfield(f"exponent {x.exponent} not in F_q^{self.n}")
        return (x.exponent // T) % (self.q**self.n - 1)

    def dlog(self, x: FieldElem) -> int:
        if x.is_zero:
            raise ZeroInput("dlog is undefined at 0")
        return x.exponent % self.M

    def ell_of(self, f: Poly) -> int:
        """Canonical ell with eps_d^ell a root of f (deg f = d <= n):
        the least element of the q-power orbit of root exponents."""
        cached = self._ell_cache.get(f)
        if cached is not None:
            return cached
        roots = self.root_exponents(f)
        ell = min(roots)
        self._ell_cache[f] = ell
        return ell

    def root_exponents(self, f: Poly) -> tuple[int, ...]:
        """All j with f(eps_d^j) = 0, for f irreducible of degree d <= n."""
        d = pdeg(f)
        require_irreducible(self.q, f, max_degree=self.n)
        layer = self.layers[d]
        coeff_exp = [self.embed_exponent(c, d) for c in f]
        L = self.q**d - 1
        roots = []
        for j in range(L):
            acc = 0
            for ce in reversed(coeff_exp):
                if acc:
                    acc = layer.pow_table[(layer.dlog[acc] + j) % L]
                if ce is not None:
                    acc = layer.add_codes(acc, layer.pow_table[ce])
            if acc == 0:
                roots.append(j)
        if len(roots) != d:
            raise NotIrreducible(f"{poly_to_str(f)} does not have {d} simple roots")
        return tuple(roots)

    def roots(self, f: Poly) -> tuple[FieldElem, ...]:
        d = pdeg(f)
        T = self.M // (self.q**d - 1)
        return tuple(FieldElem(j * T % self.M) for j in self.root_exponents(f))

    def theta_exponent(self, d: int, j: int) -> int:
        """Ambient exponent of eps_d^j (theta of it is zeta_M to this power)."""
        return (self.M // (self.q**d - 1)) * j % self.M

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "n": self.n, "N": self.N,
                "modulus": list(self.modulus), "twist": self.twist}

    def __repr__(self):
        return f"FieldCtx(q={self.q}, n={self.n}, N={self.N}, twist={self.twist})"


def make_field_ctx(q: int, n: int, budget: int = DEFAULT_FIELD_BUDGET) -> FieldCtx:
    return FieldCtx(q, n, budget=budget)


def pin_generator(ctx: FieldCtx, f: Poly) -> FieldCtx:
    """Rebuild the tower with a generator twist making eps_d a root of f.

    Only possible when f's roots generate F_{q^d}^x (f primitive); counts are
    invariant under the twist but table presentations follow it.
    """
    d = pdeg(f)
    roots = ctx.root_exponents(f)
    L = ctx.q**d - 1
    candidates = [j for j in roots if gcd(j, L) == 1]
    if not candidates:
        raise InvalidInput(f"{poly_to_str(f)} is not primitive; cannot pin")
    j = min(candidates)
    t = j if j else L  # avoid twist 0 when L == 1
    while gcd(t, ctx.M) != 1:
        t += L
    return FieldCtx(ctx.q, ctx.n, budget=ctx.budget, twist=t)
