"""Constacyclic codes as ideals of F_q[x]/(x^n - lam).

A code is stored through its monic generator polynomial, a divisor of
x^n - lam.  For n = 2^a m p^r the divisors are products of the monic
irreducible factors of x^(2^a m) - lam0 (lam0 the p^r-th root of lam), each
raised to a power in [0, p^r].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cyclo_factor import factor_binomial
from .errors import BadBase, ExponentRange, NotADivisor, ZeroDimension
from .field_core import FieldSpec, Felt, nth_root_of, prth_root
from .polyring import Poly, product


@dataclass(frozen=True)
class CodeShape:
    """Length decomposition n = 2^a * m * p^r, m odd and prime to p."""

    p: int
    a: int
    m: int
    r: int

    @property
    def n(self) -> int:
        return 2**self.a * self.m * self.p**self.r

    @property
    def M(self) -> int:
        """The p-free part 2^a * m."""
        return 2**self.a * self.m

    @property
    def pr(self) -> int:
        return self.p**self.r


def shape_decompose(n: int, p: int) -> CodeShape:
    if n < 1:
        raise ValueError("length must be >= 1")
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    a = 0
    if p != 2:
        while n % 2 == 0:
            n //= 2
            a += 1
    return CodeShape(p, a, n, r)


@lru_cache(maxsize=256)
def factor_base(field: FieldSpec, shape: CodeShape, lam: Felt) -> tuple[Poly, ...]:
    """Distinct monic irreducible factors of x^n - lam, canonically ordered.

    Each occurs in x^n - lam with multiplicity p^r.
    """
    lam0 = prth_root(field, field(lam), shape.r)
    return tuple(factor_binomial(field, shape.M, lam0).polys)


@dataclass(frozen=True)
class ExponentVector:
    base: tuple[Poly, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.base) != len(self.exps):
            raise ExponentRange("one exponent per base factor is required")


@dataclass(frozen=True, eq=False)
class ConstaCode:
    field: FieldSpec
    shape: CodeShape
    lam: Felt
    gen: Poly
    dim: int

    def __post_init__(self):
        if not self.gen.is_monic():
            raise ValueError("generator must be monic")
        if self.dim != self.n - self.gen.degree:
            raise ValueError("dimension inconsistent with generator degree")
        if not (self.modulus() % self.gen).is_zero():
            raise NotADivisor(f"{self.gen} does not divide x^{self.n} - {self.lam!r}")

    @property
    def n(self) -> int:
        return self.shape.n

    def modulus(self) -> Poly:
        """x^n - lam."""
        return Poly.binomial(self.field, self.n, self.lam)

    def check_polynomial(self) -> Poly:
        """(x^n - lam) / gen."""
        return self.modulus() // self.gen

    def __eq__(self, other):
        if not isinstance(other, ConstaCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.lam == other.lam and self.gen == other.gen)

    def __hash__(self):
        return hash((self.field, self.n, self.lam.value, self.gen))

    def __repr__(self):
        return f"ConstaCode(n={self.n}, k={self.dim}, lam={self.lam!r}, gen={self.gen})"


def code_from_generator(field: FieldSpec, n: int, lam, gen: Poly) -> ConstaCode:
    """The lam-constacyclic code generated by ``gen`` (normalized monic)."""
    lam = field(lam)
    gen = gen.monic()
    return ConstaCode(field, shape_decompose(n, field.p), lam, gen, n - gen.degree)


def build_code(field: FieldSpec, shape: CodeShape, lam, ev: ExponentVector) -> ConstaCode:
    lam = field(lam)
    base = factor_base(field, shape, lam)
    if tuple(ev.base) != base:
        raise BadBase("exponent vector base is not the canonical factor base")
    pr = shape.pr
    if any(not 0 <= e <= pr for e in ev.exps):
        raise ExponentRange(f"exponents must lie in [0, {pr}]")
    gen = product([f**e for f, e in zip(base, ev.exps) if e], field)
    return ConstaCode(field, shape, lam, gen, shape.n - gen.degree)


def exponent_vector(field: FieldSpec, shape: CodeShape, lam, exps) -> ExponentVector:
    return ExponentVector(factor_base(field, shape, field(lam)), tuple(exps))


class CodeEnumeration:
    """Restartable lexicographic stream over all lam-constacyclic codes.

    ``count`` is exact even when iteration is truncated by ``limit``.
    """

    def __init__(self, field: FieldSpec, shape: CodeShape, lam, limit=None):
        self.field = field
        self.shape = shape
        self.lam = field(lam)
        self.base = factor_base(field, shape, self.lam)
        self.limit = limit
        self.count = (shape.pr + 1) ** len(self.base)

    def exponent_vectors(self):
        grid = itertools.product(range(self.shape.pr + 1), repeat=len(self.base))
        if self.limit is not None:
            grid = itertools.islice(grid, self.limit)
        for exps in grid:
            yield ExponentVector(self.base, exps)

    def __iter__(self):
        for ev in self.exponent_vectors():
            yield build_code(self.field, self.shape, self.lam, ev)


def enumerate_codes(field: FieldSpec, shape: CodeShape, lam, limit=None) -> CodeEnumeration:
    return CodeEnumeration(field, shape, lam, limit)


def dual(c: ConstaCode) -> ConstaCode:
    """Euclidean dual: the lam^-1-constacyclic code generated by the monic reciprocal of (x^n - lam)/gen."""
    h = c.check_polynomial()
    return ConstaCode(c.field, c.shape, c.lam.inv(), h.reciprocal(monic=True), c.n - c.dim)


def is_self_dual(c: ConstaCode) -> bool:
    if c.lam != c.lam.inv():
        return False
    if 2 * c.dim != c.n:
        return False
    return c.gen == c.check_polynomial().reciprocal(monic=True)


def generator_matrix(c: ConstaCode) -> list[list[Felt]]:
    """Rows x^i * gen(x), i < dim."""
    if c.dim == 0:
        raise ZeroDimension("the zero code has no generator matrix")
    return [[Felt(c.field, v) for v in row] for row in generator_rows(c)]


def generator_rows(c: ConstaCode) -> list[tuple[int, ...]]:
    """Generator matrix rows as raw field encodings."""
    g = list(c.gen.raw)
    n = c.n
    return [tuple([0] * i + g + [0] * (n - len(g) - i)) for i in range(c.dim)]


@dataclass(frozen=True)
class MonomialMap:
    """Diagonal scaling (x_0, ..., x_{n-1}) -> (delta^0 x_0, ..., delta^(n-1) x_{n-1})."""

    delta: Felt
    n: int

    @property
    def scalars(self) -> list[Felt]:
        return [self.delta**i for i in range(self.n)]

    def apply(self, word):
        """Image of a word given as Felts (returns Felts) or raw encodings (returns a tuple of ints)."""
        field = self.delta.field
        raw = [field.pow(self.delta.value, i) for i in range(self.n)]
        if word and isinstance(word[0], Felt):
            return [Felt(field, field.mul(w.value, s)) for w, s in zip(word, raw)]
        return tuple(field.mul(w, s) for w, s in zip(word, raw))

    def inverse(self) -> MonomialMap:
        return MonomialMap(self.delta.inv(), self.n)


def cyclic_equivalent(c: ConstaCode):
    """(map, cyclic code) with map(cyclic code) == c, or None.

    Needs some delta in F_q with delta^n = lam.  The cyclic code is generated
    by monic(gen(delta x)) and the map scales coordinate i by delta^-i.
    """
    delta = nth_root_of(c.field, c.lam, c.n)
    if delta is None:
        return None
    cyc = ConstaCode(c.field, c.shape, c.field.one, c.gen.scaled(delta).monic(), c.dim)
    return MonomialMap(delta.inv(), c.n), cyc


def divisor_count(field: FieldSpec, shape: CodeShape, lam) -> int:
    """Number of lam-constacyclic codes of length n: (p^r + 1)^(#factors)."""
    return (shape.pr + 1) ** len(factor_base(field, shape, field(lam)))


__all__ = [
    "CodeShape", "shape_decompose", "factor_base", "ExponentVector", "ConstaCode",
    "code_from_generator", "build_code", "exponent_vector", "CodeEnumeration",
    "enumerate_codes", "dual", "is_self_dual", "generator_matrix", "generator_rows",
    "MonomialMap", "cyclic_equivalent", "divisor_count",
]
