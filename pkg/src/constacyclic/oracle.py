"""Brute-force ground truth for small codes.

Nothing here uses the factorization machinery: codeword sets are spans of
generator-matrix rows, duals come from orthogonality (exhaustively or via
Gaussian elimination), and divisors of x^n - lam are found by trial
division over every monic polynomial of degree <= n/2.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .constacode import ConstaCode, generator_rows
from .errors import RankDeficient, TooLarge
from .field_core import FieldSpec, Felt
from .polyring import Poly

DEFAULT_BOUND = 20000
ABOVE_CAP = "AboveCap"


@dataclass(frozen=True)
class CodewordSet:
    """A set of length-n words stored as tuples of raw field encodings."""

    field: FieldSpec
    n: int
    words: frozenset

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in self.words

    def __iter__(self):
        return iter(self.words)

    def as_felts(self):
        for w in sorted(self.words):
            yield [Felt(self.field, v) for v in w]


def _raw_rows(G, field=None):
    rows = [tuple(v.value if isinstance(v, Felt) else v for v in row) for row in G]
    if field is None:
        field = G[0][0].field
    return rows, field


def span(field: FieldSpec, rows, n: int, bound: int = DEFAULT_BOUND) -> CodewordSet:
    """All F_q-linear combinations of ``rows``."""
    rows = [tuple(r) for r in rows]
    if field.q ** len(rows) > bound:
        raise TooLarge(f"span of {len(rows)} rows over GF({field.q}) exceeds {bound}")
    add, mul, _ = _tables(field)
    scalars = np.arange(field.q)[:, None]
    W = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        multiples = mul[scalars, np.asarray(row, dtype=np.int64)[None, :]]
        W = add[W[:, None, :], multiples[None, :, :]].reshape(-1, n)
    return CodewordSet(field, n, frozenset(map(tuple, W.tolist())))


def map_image(ws: CodewordSet, scalars) -> CodewordSet:
    """Coordinate-wise scaling of every word by ``scalars`` (Felts or encodings)."""
    _, mul, _ = _tables(ws.field)
    sc = np.asarray([v.value if isinstance(v, Felt) else v for v in scalars], dtype=np.int64)
    W = np.asarray(sorted(ws.words), dtype=np.int64).reshape(-1, ws.n)
    out = mul[W, sc[None, :]]
    return CodewordSet(ws.field, ws.n, frozenset(map(tuple, out.tolist())))


def codeword_set(c: ConstaCode, bound: int = DEFAULT_BOUND) -> CodewordSet:
    """Every multiple a(x) gen(x) with deg a < dim."""
    if c.field.q ** c.dim > bound:
        raise TooLarge(f"q^dim = {c.field.q}^{c.dim} exceeds {bound}")
    return span(c.field, generator_rows(c), c.n, bound)


def shift(word, lam: int, field: FieldSpec) -> tuple:
    """(lam*c_{n-1}, c_0, ..., c_{n-2})."""
    return (field.mul(lam, word[-1]),) + tuple(word[:-1])


def check_shift_closure(ws: CodewordSet, lam) -> bool:
    lam = ws.field(lam).value
    return all(shift(w, lam, ws.field) in ws.words for w in ws.words)


def _dot(field, u, v) -> int:
    add, mul = field.add, field.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


# -- linear algebra over F_q ------------------------------------------------

def rref(field: FieldSpec, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = inv(M[r][col])
        M[r] = [mul(s, v) for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = neg(M[i][col])
                M[i] = [add(a, mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field: FieldSpec, rows) -> int:
    return len(rref(field, rows)[0])


def nullspace(field: FieldSpec, rows, n: int) -> list[tuple[int, ...]]:
    """Basis of {v : row . v = 0 for every row}."""
    R, pivots = rref(field, rows)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(row[fcol])
        basis.append(tuple(v))
    return basis


def same_row_space(field: FieldSpec, A, B) -> bool:
    return rref(field, A)[0] == rref(field, B)[0]


def basis_of(ws: CodewordSet) -> list[tuple[int, ...]]:
    R, _ = rref(ws.field, [w for w in ws.words if any(w)])
    return [tuple(r) for r in R]


def bruteforce_dual(ws: CodewordSet, bound: int = DEFAULT_BOUND) -> CodewordSet:
    """Euclidean dual of a codeword set.

    Scans all of F_q^n when q^n <= bound, otherwise spans the null space of
    a basis extracted from the words (needs q^(n-k) <= bound).
    """
    field, n = ws.field, ws.n
    if field.q**n <= bound:
        words = [w for w in ws.words if any(w)]
        out = set()
        for v in itertools.product(range(field.q), repeat=n):
            if all(_dot(field, v, w) == 0 for w in words):
                out.add(v)
        return CodewordSet(field, n, frozenset(out))
    return span(field, nullspace(field, basis_of(ws), n), n, bound)


def dual_basis(field: FieldSpec, G, n: int) -> list[tuple[int, ...]]:
    """Null-space basis of a generator matrix (Felt or raw rows)."""
    rows, _ = _raw_rows(G, field)
    return nullspace(field, rows, n)


def check_matrix_selfdual(G, field: FieldSpec = None) -> bool:
    """True iff G has 2k = n columns and G G^T = 0; G must have full row rank."""
    rows, field = _raw_rows(G, field)
    k, n = len(rows), len(rows[0])
    if rank(field, rows) != k:
        raise RankDeficient("generator matrix rows are dependent")
    if 2 * k != n:
        return False
    for i in range(k):
        for j in range(i, k):
            if _dot(field, rows[i], rows[j]):
                return False
    return True


def min_distance(c: ConstaCode, cap: int = None, bound: int = DEFAULT_BOUND):
    """Exact minimum weight by exhaustive scan.

    Returns ``math.inf`` for the zero code and ``ABOVE_CAP`` when the
    distance exceeds ``cap``.
    """
    if c.dim == 0:
        return math.inf
    ws = codeword_set(c, bound)
    d = min(sum(1 for v in w if v) for w in ws.words if any(w))
    if cap is not None and d > cap:
        return ABOVE_CAP
    return d


# -- divisors by trial division ---------------------------------------------

_TABLE_CACHE: dict = {}


def _tables(field: FieldSpec):
    """Full addition/multiplication tables and negation as numpy arrays."""
    if field not in _TABLE_CACHE:
        q = field.q
        add = np.array([[field.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[field.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        neg = np.array([field.neg(a) for a in range(q)], dtype=np.int64)
        _TABLE_CACHE[field] = (add, mul, neg)
    return _TABLE_CACHE[field]


def exhaustive_divisors(field: FieldSpec, n: int, lam, bound: int = 300000) -> set[Poly]:
    """All monic divisors of x^n - lam, by testing every monic polynomial of degree <= n/2.

    A monic g of degree d divides x^n - lam iff x^n = lam (mod g); the test
    runs for all q^d candidates at once.  Divisors above degree n/2 are the
    cofactors of those below.
    """
    lam = field(lam).value
    q = field.q
    half = n // 2
    if sum(q**d for d in range(half + 1)) > bound:
        raise TooLarge(f"{q}^{half} candidates exceed {bound}")
    add, mul, neg = _tables(field)
    target = Poly.binomial(field, n, field.from_int(lam))
    found = {Poly._raw(field, [1])}
    for d in range(1, half + 1):
        low = np.array(list(itertools.product(range(q), repeat=d)), dtype=np.int64)
        N = len(low)
        # state holds x^k mod g as d coefficients
        S = np.zeros((N, d), dtype=np.int64)
        S[:, 0] = 1
        negg = neg[low]
        for _ in range(n):
            top = S[:, -1].copy()
            S = np.concatenate([np.zeros((N, 1), dtype=np.int64), S[:, :-1]], axis=1)
            S = add[S, mul[top[:, None], negg]]
        ok = (S[:, 0] == lam) & np.all(S[:, 1:] == 0, axis=1)
        for row in low[ok]:
            g = Poly._raw(field, row.tolist() + [1])
            found.add(g)
    out = set(found)
    for g in found:
        out.add(target // g)
    return out
