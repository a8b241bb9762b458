"""Matrices over F_q: conjugacy-class indices, cycle types, class sizes.

A matrix is a tuple of row tuples of integer-coded F_q entries.  A conjugacy
class of GL_n(F_q) is named by a ClassIndex: a finitely supported map from
monic irreducibles (never z) to partitions whose weighted sizes add to n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .basefield import BaseField, base_field
from .errors import GroupTooLarge, NormMismatch, Singular
from .numutil import binom, qfact
from .partitions import (Partition, as_partition, conjugate, multiplicities,
                         partial_sums)
from .polys import (Poly, companion_matrix, count_irreducibles,
                    enumerate_irreducibles, factor_poly, pdeg, pmul,
                    poly_to_str, ppow, ptrim)

MatrixQ = tuple

_GROUP_ENUM_LIMIT = 2**20


# --- matrix arithmetic ------------------------------------------------------------

def mat_identity(n: int) -> MatrixQ:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: BaseField, A: MatrixQ, B: MatrixQ) -> MatrixQ:
    n, m, k = len(A), len(B[0]) if B else 0, len(B)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = 0
            for t in range(k):
                a = Ai[t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = F.add(acc, F.mul(a, b))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(F: BaseField, c: int, A: MatrixQ) -> MatrixQ:
    return tuple(tuple(F.mul(c, x) for x in row) for row in A)


def mat_add(F: BaseField, A: MatrixQ, B: MatrixQ) -> MatrixQ:
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def _row_reduce(F: BaseField, rows: list[list[int]]) -> int:
    """In-place row echelon; returns the rank."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for r in range(n_rows):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [F.sub(x, F.mul(c, y))
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def mat_rank(F: BaseField, A: MatrixQ) -> int:
    return _row_reduce(F, [list(r) for r in A])


def kernel_dim(F: BaseField, A: MatrixQ) -> int:
    return len(A) - mat_rank(F, A)


def mat_det(F: BaseField, A: MatrixQ) -> int:
    n = len(A)
    rows = [list(r) for r in A]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = F.neg(det)
        det = F.mul(det, rows[col][col])
        inv = F.inv(rows[col][col])
        for r in range(col + 1, n):
            if rows[r][col]:
                c = F.mul(inv, rows[r][col])
                rows[r] = [F.sub(x, F.mul(c, y))
                           for x, y in zip(rows[r], rows[col])]
    return det


def mat_inv(F: BaseField, A: MatrixQ) -> MatrixQ:
    n = len(A)
    rows = [list(A[i]) + [1 if j == i else 0 for j in range(n)]
            for i in range(n)]
    if _row_reduce(F, rows) != n:
        raise Singular("matrix is not invertible")
    return tuple(tuple(row[n:]) for row in rows)


def char_poly(F: BaseField, A: MatrixQ) -> Poly:
    """Characteristic polynomial det(zI - A), monic, as a poly over F_q.

    Leibniz expansion over permutations; intended for the small n used here.
    """
    n = len(A)
    if n == 0:
        return (1,)
    entries = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                entries[(i, j)] = ptrim((F.neg(A[i][j]), 1))
            else:
                entries[(i, j)] = ptrim((F.neg(A[i][j]),))
    total: Poly = ()
    from itertools import permutations
    from .polys import padd, pneg
    for sigma in permutations(range(n)):
        term: Poly = (1,)
        for i in range(n):
            term = pmul(F, term, entries[(i, sigma[i])])
            if not term:
                break
        if not term:
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if sigma[i] > sigma[j])
        total = padd(F, total, pneg(F, term) if inversions % 2 else term)
    return total


def poly_at_matrix(F: BaseField, f: Poly, A: MatrixQ) -> MatrixQ:
    n = len(A)
    out = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    for c in reversed(f):
        out = mat_mul(F, out, A)
        if c:
            out = mat_add(F, out, mat_scale(F, c, mat_identity(n)))
    return out


# --- class indices -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ClassIndex:
    """Finitely supported map from monic irreducibles to partitions.

    items are (poly, partition) pairs sorted by (degree, coefficients); the
    norm (sum of |partition| * deg) is the ambient matrix size.
    """

    items: tuple[tuple[Poly, Partition], ...]

    @staticmethod
    def make(pairs) -> "ClassIndex":
        cleaned = tuple(sorted((tuple(f), as_partition(lam))
                               for f, lam in pairs if as_partition(lam)))
        return ClassIndex(tuple(sorted(cleaned, key=lambda it: (pdeg(it[0]), it[0]))))

    @property
    def norm(self) -> int:
        return sum(sum(lam) * pdeg(f) for f, lam in self.items)

    @property
    def support(self) -> tuple[Poly, ...]:
        return tuple(f for f, _ in self.items)

    def partition_of(self, f: Poly) -> Partition:
        for g, lam in self.items:
            if g == f:
                return lam
        return ()

    @property
    def is_primary(self) -> bool:
        return len(self.items) == 1

    @property
    def is_regular_semisimple(self) -> bool:
        return all(lam == (1,) for _, lam in self.items)

    def cycle_type(self) -> Partition:
        parts = []
        for f, lam in self.items:
            parts.extend([pdeg(f)] * sum(lam))
        return as_partition(parts)

    def to_json(self) -> list:
        return [{"poly": list(f), "partition": list(lam)}
                for f, lam in self.items]

    def label(self) -> str:
        return "; ".join(f"{poly_to_str(f)} -> {list(lam)}"
                         for f, lam in self.items)


def class_index(F: BaseField, g: MatrixQ) -> ClassIndex:
    """Conjugacy-class index of an invertible matrix.

    For each irreducible factor f of the characteristic polynomial, the
    partition is recovered from kernel-dimension jumps of powers of f(g):
    the i-th conjugate part is dim ker f(g)^i - dim ker f(g)^(i-1), scaled
    by 1/deg f.
    """
    q = F.q
    n = len(g)
    cp = char_poly(F, g)
    if cp[0] == 0:
        raise Singular("matrix is singular")
    pairs = []
    for f, mult in factor_poly(q, cp):
        if mult == 1:
            pairs.append((f, (1,)))
            continue
        d = pdeg(f)
        fg = poly_at_matrix(F, f, g)
        conj_parts = []
        power = fg
        prev = 0
        for _ in range(mult):
            dim = kernel_dim(F, power)
            step = (dim - prev) // d
            assert (dim - prev) % d == 0
            if step == 0:
                break
            conj_parts.append(step)
            prev = dim
            power = mat_mul(F, power, fg)
        lam = conjugate(as_partition(conj_parts))
        assert sum(lam) == mult
        pairs.append((f, lam))
    idx = ClassIndex.make(pairs)
    assert idx.norm == n
    return idx


def cycle_type(F: BaseField, g: MatrixQ) -> Partition:
    return class_index(F, g).cycle_type()


def is_regular_semisimple(F: BaseField, g: MatrixQ) -> bool:
    return class_index(F, g).is_regular_semisimple


def is_regular_elliptic(F: BaseField, g: MatrixQ) -> bool:
    idx = class_index(F, g)
    return idx.is_primary and idx.items[0][1] == (1,) \
        and pdeg(idx.items[0][0]) == len(g)


def rcf_from_index(F: BaseField, idx: ClassIndex) -> MatrixQ:
    """Rational canonical form: companion blocks A(f^lam_i), largest first."""
    blocks = []
    for f, lam in idx.items:
        for part in lam:
            h = ppow(F, f, part)
            blocks.append((pdeg(h), f, part, companion_matrix(F, h)))
    blocks.sort(key=lambda b: (-b[0], b[1], -b[2]))
    n = idx.norm
    rows = []
    offset = 0
    for size, _, _, mat in blocks:
        for i in range(size):
            row = [0] * n
            for j in range(size):
                row[offset + j] = mat[i][j]
            rows.append(tuple(row))
        offset += size
    return tuple(rows)


# --- sizes --------------------------------------------------------------------------

def gamma_n(q: int, n: int) -> int:
    """|GL_n(F_q)| = q^C(n,2) (q-1)^n [n]_q!."""
    return q ** (n * (n - 1) // 2) * (q - 1) ** n * qfact(n, q)


def class_size(q: int, idx: ClassIndex, n: int | None = None) -> int:
    """Conjugacy class size from the centralizer product formula."""
    norm = idx.norm
    if n is not None and norm != n:
        raise NormMismatch(f"index norm {norm} != {n}")
    denom = 1
    for f, lam in idx.items:
        Q = q ** pdeg(f)
        sums = partial_sums(conjugate(lam))
        for i, m_i in multiplicities(lam).items():
            s_i = sums[i - 1]
            for j in range(1, m_i + 1):
                denom *= Q**s_i - Q ** (s_i - j)
    size, rem = divmod(gamma_n(q, norm), denom)
    assert rem == 0
    return size


def ct_box_size(q: int, mu: Partition) -> int:
    """#CT_mu^box: regular semisimple matrices of cycle type mu."""
    mu = as_partition(mu)
    n = sum(mu)
    each = gamma_n(q, n)
    for part in mu:
        assert each % (q**part - 1) == 0
        each //= q**part - 1
    count = 1
    for i, m in multiplicities(mu).items():
        count *= binom(count_irreducibles(q, i), m)
    return each * count


def rss_class_size(q: int, mu: Partition) -> int:
    """Size of each single conjugacy class inside CT_mu^box."""
    mu = as_partition(mu)
    size = gamma_n(q, sum(mu))
    for part in mu:
        size //= q**part - 1
    return size


@lru_cache(maxsize=None)
def enumerate_class_indices(q: int, n: int) -> tuple[ClassIndex, ...]:
    """All class indices of norm n over F_q, deterministically ordered."""
    polys = []
    for d in range(1, n + 1):
        for f in enumerate_irreducibles(q, d):
            polys.append(f)
    polys.sort(key=lambda f: (pdeg(f), f))

    from .partitions import partitions_of

    results: list[ClassIndex] = []

    def rec(i: int, remaining: int, acc: list):
        if remaining == 0:
            results.append(ClassIndex.make(list(acc)))
            return
        if i == len(polys):
            return
        f = polys[i]
        d = pdeg(f)
        rec(i + 1, remaining, acc)
        for size in range(1, remaining // d + 1):
            for lam in partitions_of(size):
                acc.append((f, lam))
                rec(i + 1, remaining - size * d, acc)
                acc.pop()

    rec(0, n, [])
    return tuple(sorted(results, key=_index_sort_key))


def _index_sort_key(idx: ClassIndex):
    return (len(idx.items),
            tuple((pdeg(f), f, lam) for f, lam in idx.items))


def ct_size(q: int, mu: Partition) -> int:
    """#CT_mu by summing class sizes over all indices of that cycle type."""
    mu = as_partition(mu)
    n = sum(mu)
    return sum(class_size(q, idx)
               for idx in enumerate_class_indices(q, n)
               if idx.cycle_type() == mu)


@lru_cache(maxsize=None)
def enumerate_group(q: int, n: int, budget: int = 10**6) -> tuple[MatrixQ, ...]:
    """All of GL_n(F_q), in lexicographic order on flattened entries."""
    order = gamma_n(q, n)
    if order > budget or q ** (n * n) > _GROUP_ENUM_LIMIT:
        raise GroupTooLarge(f"|GL_{n}(F_{q})| = {order} exceeds budget")
    F = base_field(q)
    out = []
    for entries in product(range(q), repeat=n * n):
        A = tuple(entries[i * n:(i + 1) * n] for i in range(n))
        if mat_det(F, A):
            out.append(A)
    assert len(out) == order
    return tuple(out)
