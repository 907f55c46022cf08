"""Cyclotomic cosets, binomial factorization and twisted factor grids.

The factorization engine is Cantor-Zassenhaus (distinct-degree, then
equal-degree splitting with a fixed seed); results are re-sorted so they do
not depend on the random choices.  :func:`minimal_polynomial` builds factors
from the splitting field instead and serves as an independent route.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import EvenM, FieldTooLarge, NotCoprime, ZeroConstant
from .field_core import MAX_Q, FieldSpec, Felt, make_field, root_of_unity
from .polyring import Poly, poly_gcd, product

_SEED = 0x5EED


def multiplicative_order(q: int, m: int) -> int:
    """Smallest t >= 1 with q**t = 1 (mod m); 1 when m == 1."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    t, v = 1, q % m
    while v != 1:
        v = v * q % m
        t += 1
    return t


@dataclass(frozen=True)
class Coset:
    modulus_n: int
    q: int
    rep: int
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i % self.modulus_n in self.members

    def negated(self) -> Coset:
        n = self.modulus_n
        members = tuple(sorted({(-i) % n for i in self.members}))
        return Coset(n, self.q, members[0], members)


def cyclotomic_cosets(n: int, q: int) -> list[Coset]:
    """Partition of {0, ..., n-1} into orbits under multiplication by q."""
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen = set()
    out = []
    for i in range(n):
        if i in seen:
            continue
        orbit = set()
        j = i
        while j not in orbit:
            orbit.add(j)
            j = j * q % n
        seen |= orbit
        members = tuple(sorted(orbit))
        out.append(Coset(n, q, members[0], members))
    return out


def coset_of(i: int, n: int, q: int) -> Coset:
    i %= n
    orbit = set()
    j = i
    while j not in orbit:
        orbit.add(j)
        j = j * q % n
    members = tuple(sorted(orbit))
    return Coset(n, q, members[0], members)


@dataclass(frozen=True)
class FactorList:
    target: Poly
    factors: tuple[tuple[Poly, int], ...]

    @property
    def polys(self) -> list[Poly]:
        return [f for f, _ in self.factors]

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f, _ in self.factors]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def product(self) -> Poly:
        return product([f**e for f, e in self.factors], self.target.field)


# -- Cantor-Zassenhaus ------------------------------------------------------

def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    field = f.field
    x = Poly.x(field)
    out = []
    g = f
    h = x
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(field.q, g)
        part = poly_gcd(g, h - x)
        if not part.is_one():
            out.append((part, d))
            g = g // part
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _random_poly(field: FieldSpec, deg_bound: int, rng: random.Random) -> Poly:
    while True:
        r = Poly._raw(field, [rng.randrange(field.q) for _ in range(deg_bound)])
        if r.degree >= 1:
            return r


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    if f.degree == d:
        return [f]
    field = f.field
    while True:
        r = _random_poly(field, f.degree, rng)
        if field.p == 2:
            t = r % f
            acc = t
            for _ in range(field.s * d - 1):
                t = (t * t) % f
                acc = acc + t
            g = poly_gcd(f, acc)
        else:
            w = r.powmod((field.q**d - 1) // 2, f)
            g = poly_gcd(f, w - 1)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor_squarefree(f: Poly) -> list[Poly]:
    """Monic irreducible factors of a squarefree polynomial, canonically sorted."""
    if f.degree < 1:
        return []
    f = f.monic()
    rng = random.Random(_SEED)
    out = []
    for part, d in _distinct_degree(f):
        out.extend(_equal_degree(part, d, rng))
    return sorted(out, key=Poly.sort_key)


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    field = f.field
    x = Poly.x(field)
    g = f.monic()
    h = x
    for _ in range(g.degree // 2):
        h = h.powmod(field.q, g)
        if not poly_gcd(g, h - x).is_one():
            return False
    return True


def factor_binomial(field: FieldSpec, m: int, c) -> FactorList:
    """Factor x**m - c into monic irreducibles (each of multiplicity 1)."""
    c = field(c)
    if m < 1:
        raise ValueError("m must be >= 1")
    if m % field.p == 0:
        raise NotCoprime(f"m = {m} is divisible by the characteristic {field.p}")
    if not c:
        raise ZeroConstant("x^m - 0 is not squarefree")
    target = Poly.binomial(field, m, c)
    return FactorList(target, tuple((f, 1) for f in factor_squarefree(target)))


# -- splitting-field route --------------------------------------------------

def _embedding(small: FieldSpec, big: FieldSpec) -> dict[int, int]:
    """Map small-field encodings to big-field encodings (big contains small)."""
    if small.s == 1:
        return {v: v for v in range(small.q)}
    mod = Poly(big, list(small.modulus))
    for g in big.elements():
        if not mod(g):
            break
    else:  # pragma: no cover
        raise AssertionError("modulus has no root in the extension")
    out = {}
    for ds in (small.digits(v) for v in range(small.q)):
        acc = big.zero
        for c in reversed(ds):
            acc = acc * g + c
        out[small.from_digits(ds)] = acc.value
    return out


def minimal_polynomial(field: FieldSpec, n: int, coset: Coset) -> Poly:
    """Minimal polynomial over ``field`` of {zeta**j : j in coset}.

    zeta is the canonical primitive n-th root of unity: the generator of
    F_{q^t} (t = ord_n(q), default modulus) raised to (q**t - 1)/n.
    """
    if gcd(n, field.q) != 1:
        raise NotCoprime(f"gcd({n}, {field.q}) != 1")
    if coset.modulus_n != n or coset.q % n != field.q % n:
        raise ValueError("coset does not belong to (n, q)")
    t = multiplicative_order(field.q, n)
    if field.q**t > MAX_Q:
        raise FieldTooLarge(f"splitting field GF({field.q}^{t}) is too large")
    big = make_field(field.p, field.s * t)
    zeta = big.gen_pow((big.q - 1) // n)
    poly = Poly._raw(big, [1])
    for j in coset.members:
        poly = poly * Poly(big, [-(zeta**j), 1])
    back = {b: a for a, b in _embedding(field, big).items()}
    return Poly._raw(field, [back[v] for v in poly.raw])


# -- twisted grids ----------------------------------------------------------

_VARIANTS = ("all", "even", "odd")


@dataclass(frozen=True)
class FactorGrid:
    """Monic twists f_i(scale^-1 * alpha^-t_k * x) of the factors of x^m - 1.

    ``t_k`` is k (variant all, alpha of order 2^a), 2k (even) or 2k - 1 (odd,
    alpha of order 2^(a+1)), for k = 1 .. 2^a.
    """

    a: int
    m: int
    variant: str
    twist_root: Felt
    scale: Felt
    base_factors: FactorList
    grid: dict = dc_field(compare=False)
    target: Poly = None

    def twist_exponent(self, k: int) -> int:
        return {"all": k, "even": 2 * k, "odd": 2 * k - 1}[self.variant]

    def twist(self, k: int) -> Felt:
        """The substitution constant scale^-1 * alpha^-t_k."""
        return (self.scale * self.twist_root ** self.twist_exponent(k)).inv()

    def entries(self) -> list[Poly]:
        return [self.grid[key] for key in sorted(self.grid)]

    def product(self) -> Poly:
        return product(self.entries(), self.target.field)

    def raw_product(self) -> Poly:
        """Product of the twists before monic normalization."""
        polys = []
        for k in range(1, 2**self.a + 1):
            c = self.twist(k)
            polys.extend(f.scaled(c) for f in self.base_factors.polys)
        return product(polys, self.target.field)

    def as_factor_list(self) -> FactorList:
        ordered = sorted(self.entries(), key=Poly.sort_key)
        return FactorList(self.target, tuple((f, 1) for f in ordered))


def factor_grid(field: FieldSpec, a: int, m: int, scale=1, variant: str = "all") -> FactorGrid:
    """Factor x^(2^a m) -/+ scale^(2^a m) through twists of the factors of x^m - 1.

    Products: ``all`` and ``even`` give x^(2^a m) - scale^(2^a m), ``odd``
    gives x^(2^a m) + scale^(2^a m).
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")
    if a < 0:
        raise ValueError("a must be >= 0")
    if m % 2 == 0:
        raise EvenM(f"m = {m} must be odd")
    scale = field(scale)
    if not scale:
        raise ValueError("scale must be nonzero")
    order = 2**a if variant == "all" else 2 ** (a + 1)
    alpha = root_of_unity(field, order)
    base = factor_binomial(field, m, 1)
    grid = {}
    tmp = FactorGrid(a, m, variant, alpha, scale, base, grid, None)
    for k in range(1, 2**a + 1):
        c = tmp.twist(k)
        for i, f in enumerate(base.polys):
            grid[(k, i)] = f.scaled(c).monic()
    M = 2**a * m
    rhs = scale**M
    target = Poly.binomial(field, M, -rhs if variant == "odd" else rhs)
    return FactorGrid(a, m, variant, alpha, scale, base, grid, target)
