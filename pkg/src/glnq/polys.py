"""Monic polynomials over F_q: enumeration, counting, factoring, companions.

A polynomial is a tuple of integer-coded F_q coefficients, low degree first,
with no trailing zero (the zero polynomial is the empty tuple).  All
arithmetic takes the BaseField as an argument.  Irreducibility testing is
trial division against exhaustively enumerated lower degrees, which is the
right tool at the intended sizes (q^d in the thousands).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .basefield import BaseField, base_field
from .errors import (DegreeOutOfRange, EnumerationTooLarge, NotIrreducible,
                     NotMonic, ZeroConstantTerm)
from .numutil import divisors, moebius

Poly = tuple

_ENUM_LIMIT = 2**20


# --- raw polynomial arithmetic --------------------------------------------------

def pdeg(f: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def ptrim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def padd(F: BaseField, f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return ptrim(F.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0)
                 for i in range(n))


def pneg(F: BaseField, f: Poly) -> Poly:
    return tuple(F.neg(c) for c in f)


def psub(F: BaseField, f: Poly, g: Poly) -> Poly:
    return padd(F, f, pneg(F, g))


def pscale(F: BaseField, c: int, f: Poly) -> Poly:
    if c == 0:
        return ()
    return tuple(F.mul(c, a) for a in f)


def pmul(F: BaseField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return ptrim(out)


def pdivmod(F: BaseField, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    ginv = F.inv(g[-1])
    quot = [0] * max(0, len(f) - len(g) + 1)
    for shift in range(len(f) - len(g), -1, -1):
        c = F.mul(rem[shift + len(g) - 1], ginv)
        if c:
            quot[shift] = c
            for i, b in enumerate(g):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
    return ptrim(quot), ptrim(rem)


def pmod(F: BaseField, f: Poly, g: Poly) -> Poly:
    return pdivmod(F, f, g)[1]


def peval(F: BaseField, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def ppow(F: BaseField, f: Poly, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = pmul(F, out, f)
    return out


def is_monic(f: Poly) -> bool:
    return bool(f) and f[-1] == 1


def monomial(d: int) -> Poly:
    """The polynomial z^d."""
    return (0,) * d + (1,)


# --- irreducibles ---------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_irreducibles(q: int, d: int) -> tuple[Poly, ...]:
    """All monic irreducible degree-d polynomials over F_q except z itself,
    in lexicographic order on coefficient sequences (constant term first)."""
    if d < 1:
        raise ValueError("degree must be positive")
    if q**d > _ENUM_LIMIT:
        raise EnumerationTooLarge(f"cannot enumerate q^d = {q**d} polynomials")
    F = base_field(q)
    lower = [enumerate_irreducibles(q, c) for c in range(1, d // 2 + 1)]
    out = []
    for coeffs in product(range(q), repeat=d):
        if coeffs[0] == 0:
            continue  # divisible by z (also excludes z itself)
        f = coeffs + (1,)
        if any(not pmod(F, f, g) for glist in lower for g in glist):
            continue
        out.append(f)
    return tuple(out)


def count_irreducibles(q: int, m: int) -> int:
    """#F_m(q) by the Gauss divisor sum (1/m) sum mu(m/s)(q^s - 1)."""
    total = sum(moebius(m // s) * (q**s - 1) for s in divisors(m))
    assert total % m == 0
    return total // m


def is_irreducible(q: int, f: Poly) -> bool:
    """Mathematical irreducibility of a monic polynomial (z counts)."""
    if not is_monic(f):
        raise NotMonic(f"{f} is not monic")
    d = pdeg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    F = base_field(q)
    if f[0] == 0:
        return False
    return not any(not pmod(F, f, g)
                   for c in range(1, d // 2 + 1)
                   for g in enumerate_irreducibles(q, c))


def require_irreducible(q: int, f: Poly, max_degree: int | None = None) -> None:
    """Check membership in F(q) (monic, irreducible, nonconstant, not z)."""
    d = pdeg(f)
    if max_degree is not None and not 1 <= d <= max_degree:
        raise DegreeOutOfRange(f"degree {d} outside 1..{max_degree}")
    if d < 1 or not is_monic(f) or f[0] == 0 or not is_irreducible(q, f):
        raise NotIrreducible(f"{poly_to_str(f)} is not an admissible irreducible")


def factor_poly(q: int, f: Poly) -> list[tuple[Poly, int]]:
    """Factor a monic polynomial with nonzero constant term into irreducibles.

    Returns sorted (factor, multiplicity) pairs.  Trial division against
    enumerated irreducibles, cheapest degrees first.
    """
    if not is_monic(f):
        raise NotMonic(f"{f} is not monic")
    if f[0] == 0:
        raise ZeroConstantTerm("polynomial vanishes at 0")
    F = base_field(q)
    out = []
    rest = f
    d = 1
    while pdeg(rest) > 0:
        if 2 * d > pdeg(rest):
            out.append((rest, 1))
            break
        for g in enumerate_irreducibles(q, d):
            mult = 0
            while True:
                quot, rem = pdivmod(F, rest, g)
                if rem:
                    break
                rest = quot
                mult += 1
            if mult:
                out.append((g, mult))
        d += 1
    return sorted(out)


def is_squarefree(q: int, f: Poly) -> bool:
    """True when no irreducible factor of monic f repeats."""
    return all(m == 1 for _, m in factor_poly(q, f))


# --- companion matrices ----------------------------------------------------------

def companion_matrix(F: BaseField, h: Poly):
    """Companion matrix of monic h (subdiagonal of ones, last column -h_i);
    the empty matrix for h = 1."""
    if not is_monic(h):
        raise NotMonic(f"{h} is not monic")
    m = pdeg(h)
    rows = []
    for i in range(m):
        row = [0] * m
        if i > 0:
            row[i - 1] = 1
        row[m - 1] = F.neg(h[i])
        rows.append(tuple(row))
    return tuple(rows)


# --- text format -----------------------------------------------------------------

def poly_to_str(f: Poly, var: str = "z") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(pdeg(f), -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return "+".join(parts) if parts else "0"


def poly_from_str(q: int, text: str, var: str = "z") -> Poly:
    """Parse 'z^2+z+1' or a coefficient list '[1,1,1]' (low degree first)."""
    F = base_field(q)
    text = text.strip().replace(" ", "")
    if text.startswith("["):
        coeffs = [int(tok) % q for tok in text.strip("[]").split(",") if tok]
        return ptrim(coeffs)
    coeffs: dict[int, int] = {}
    for term in text.replace("-", "+-").split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            c = int(head.rstrip("*")) if head.rstrip("*") else 1
            d = int(tail[1:]) if tail.startswith("^") else (1 if not tail else int(tail))
        else:
            c, d = int(term), 0
        cc = c % q
        if neg:
            cc = F.neg(cc)
        coeffs[d] = F.add(coeffs.get(d, 0), cc)
    size = max(coeffs, default=0) + 1
    return ptrim([coeffs.get(i, 0) for i in range(size)])
