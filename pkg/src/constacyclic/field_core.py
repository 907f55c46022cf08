"""Finite fields F_{p^s} with exact, table-driven element arithmetic.

Elements are stored as integers ``c0 + c1*p + ... + c_{s-1}*p^(s-1)`` where
``(c0, ..., c_{s-1})`` are the coordinates in the polynomial basis defined by
the field modulus.  Multiplication goes through discrete-log tables and
addition (for s > 1) through a Zech-logarithm table, so fields are capped at
``MAX_Q`` elements.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from .errors import (
    CompositeP,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NoSuchRoot,
    ReducibleModulus,
    ZeroElement,
)

MAX_Q = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over Z/p as plain int lists (constant term first) ----------
# Only used to validate moduli and to find the generator before the log
# tables exist; everything else goes through polyring.

def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        if c:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
        a.pop()
        _zp_trim(a)
    return a


def _zp_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_mod(_zp_trim(out), f, p)


def _zp_powmod(a, e, f, p):
    result = [1]
    base = _zp_mod(a, f, p)
    while e:
        if e & 1:
            result = _zp_mulmod(result, base, f, p)
        base = _zp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _zp_gcd(a, b, p):
    a, b = _zp_trim(list(a)), _zp_trim(list(b))
    while b:
        a, b = b, _zp_mod(a, b, p)
    return a


def _zp_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _zp_trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f, p: int) -> bool:
    """Rabin's test for a monic polynomial over Z/p given as a coefficient list."""
    f = [c % p for c in f]
    _zp_trim(f)
    s = len(f) - 1
    if s < 1 or f[-1] != 1:
        return False
    if s == 1:
        return True
    x = [0, 1]
    # x^(p^s) == x (mod f)
    frob = x
    powers = {}
    for i in range(1, s + 1):
        frob = _zp_powmod(frob, p, f, p)
        powers[i] = frob
    if _zp_sub(powers[s], x, p):
        return False
    for ell in prime_factors(s):
        g = _zp_gcd(f, _zp_sub(powers[s // ell], x, p), p)
        if len(g) > 1:
            return False
    return True


def default_modulus(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``s``, ordering (a0, ..., a_{s-1}) lexicographically."""
    for low in itertools.product(range(p), repeat=s):
        f = list(low) + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field F_{p^s} for a fixed modulus.

    Build instances with :func:`make_field`; the constructor assumes its
    arguments were already validated.
    """

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.modulus = tuple(modulus)
        self.q = p**s
        self._qm1 = self.q - 1
        self._find_generator()
        self._build_tables()

    # -- construction -------------------------------------------------------

    def digits(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.s):
            out.append(v % p)
            v //= p
        return tuple(out)

    def from_digits(self, ds) -> int:
        v = 0
        for c in reversed(list(ds)):
            v = v * self.p + c % self.p
        return v

    def _find_generator(self):
        p, q = self.p, self.q
        f = list(self.modulus)
        divisors = [(q - 1) // ell for ell in prime_factors(q - 1)]
        for ds in itertools.product(range(p), repeat=self.s):
            if not any(ds):
                continue
            a = _zp_trim(list(ds))
            if all(_zp_powmod(a, e, f, p) != [1] for e in divisors):
                self._gen_digits = ds
                return
        raise AssertionError("no primitive element")  # pragma: no cover

    def _build_tables(self):
        p, q, s = self.p, self.q, self.s
        qm1 = self._qm1
        exp = [0] * max(qm1, 1)
        log = [-1] * q
        if s == 1:
            g = self._gen_digits[0]
            v = 1
            for i in range(qm1):
                exp[i] = v
                log[v] = i
                v = v * g % p
        else:
            # multiplication by g on coordinate vectors
            f = self.modulus
            g = list(self._gen_digits)
            cur = [1] + [0] * (s - 1)
            for i in range(qm1):
                val = self.from_digits(cur)
                exp[i] = val
                log[val] = i
                prod = [0] * (2 * s - 1)
                for a_i, ca in enumerate(cur):
                    if ca:
                        for b_i, cb in enumerate(g):
                            prod[a_i + b_i] += ca * cb
                for d in range(2 * s - 2, s - 1, -1):
                    c = prod[d] % p
                    if c:
                        for j in range(s + 1):
                            prod[d - s + j] -= c * f[j]
                cur = [c % p for c in prod[:s]]
            zech = [-1] * qm1
            for d in range(qm1):
                w = exp[d]
                c0 = w % p
                w = w - c0 + (c0 + 1) % p
                zech[d] = log[w] if w else -1
            self._zech = zech
        self._exp = exp
        self._log = log
        self.generator = Felt(self, exp[1 % qm1] if qm1 > 1 else 1)
        self._half = qm1 // 2

    # -- raw integer arithmetic (hot paths used by polyring) ----------------

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la = log[a]
        d = log[b] - la
        if d < 0:
            d += self._qm1
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[(la + z) % self._qm1]

    def neg(self, a: int) -> int:
        if self.s == 1:
            return -a % self.p
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self._half) % self._qm1]

    def sub(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._qm1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.s == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % self._qm1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("negative power of zero")
        return self._exp[self._log[a] * e % self._qm1]

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("discrete log of zero")
        return self._log[a]

    def exp_of(self, k: int) -> int:
        return self._exp[k % self._qm1]

    def key(self, a: int) -> tuple[int, ...]:
        """Sort key: coordinate vector (c0, ..., c_{s-1}) compared lexicographically."""
        return self.digits(a)

    # -- element construction -----------------------------------------------

    def __call__(self, k) -> Felt:
        """Embed an integer (as k * 1) or pass a Felt of this field through."""
        if isinstance(k, Felt):
            self.check(k)
            return k
        return Felt(self, k % self.p)

    def from_int(self, v: int) -> Felt:
        """Element with integer encoding ``v`` in [0, q)."""
        if not 0 <= v < self.q:
            raise ValueError(f"element encoding {v} outside [0, {self.q})")
        return Felt(self, v)

    def from_coeffs(self, coeffs) -> Felt:
        coeffs = list(coeffs)
        if len(coeffs) != self.s:
            raise ValueError(f"expected {self.s} coordinates")
        return Felt(self, self.from_digits(coeffs))

    def gen_pow(self, k: int) -> Felt:
        """generator**k, for any integer k."""
        return Felt(self, self.exp_of(k))

    @property
    def zero(self) -> Felt:
        return Felt(self, 0)

    @property
    def one(self) -> Felt:
        return Felt(self, 1)

    def elements(self):
        """All q elements in the canonical (lexicographic coordinate) order."""
        for ds in itertools.product(range(self.p), repeat=self.s):
            yield Felt(self, self.from_digits(ds))

    def units(self):
        for x in self.elements():
            if x.value:
                yield x

    def check(self, x: Felt):
        if x.field is not self and x.field != self:
            raise FieldMismatch(f"element of {x.field} used in {self}")

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s}, modulus={list(self.modulus)})"


class Felt:
    """An element of a :class:`FieldSpec`; immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, Felt):
            self.field.check(other)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        raise TypeError(f"cannot combine Felt with {type(other).__name__}")

    def __add__(self, other):
        return Felt(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Felt(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Felt(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return Felt(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Felt(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Felt(self.field, self.field.div(self._other(other), self.value))

    def __pow__(self, e: int):
        return Felt(self.field, self.field.pow(self.value, e))

    def inv(self) -> Felt:
        return Felt(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Felt):
            self.field.check(other)
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def log(self) -> int:
        """Discrete logarithm to the field's canonical generator."""
        return self.field.log_of(self.value)

    def __repr__(self):
        f = self.field
        if f.s == 1:
            return str(self.value)
        if self.value == 0:
            return "0"
        return f"b^{self.log()}"


@lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, s, modulus)


def make_field(p: int, s: int = 1, modulus=None) -> FieldSpec:
    """Return F_{p^s}.

    Without ``modulus`` the smallest monic irreducible of degree ``s`` is
    used (coefficients (a0, ..., a_{s-1}) compared lexicographically).  The
    canonical generator is the smallest element of order q - 1 in the same
    order.  Results are cached, so equal arguments give the same object.
    """
    if not is_prime(p):
        raise CompositeP(f"{p} is not prime")
    if s < 1:
        raise ValueError("extension degree must be >= 1")
    if p**s > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{s} exceeds {MAX_Q}")
    if modulus is None:
        modulus = default_modulus(p, s)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree s")
        if not is_irreducible_mod_p(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return _cached_field(p, s, tuple(modulus))


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "eq": lambda a, b: a == b,
}


def fq_arithmetic(a: Felt, b, kind: str):
    """Dispatch helper; ``b`` is an integer exponent for ``pow`` and ignored by ``inv``."""
    if kind == "pow":
        return a**b
    if kind == "inv":
        return a.inv()
    if kind not in _OPS:
        raise ValueError(f"unknown operation {kind!r}")
    if not isinstance(b, Felt):
        raise TypeError("second operand must be a Felt")
    return _OPS[kind](a, b)


def element_order(x: Felt) -> int:
    if x.value == 0:
        raise ZeroElement("zero has no multiplicative order")
    qm1 = x.field.q - 1
    return qm1 // gcd(x.log(), qm1)


def root_of_unity(field: FieldSpec, n: int) -> Felt:
    """Element of order exactly ``n``: generator ** ((q-1)/n)."""
    if n < 1 or (field.q - 1) % n:
        raise NoSuchRoot(f"no element of order {n} in {field}")
    return field.gen_pow((field.q - 1) // n)


def prth_root(field: FieldSpec, lam: Felt, r: int) -> Felt:
    """The unique x with x ** (p**r) == lam (Frobenius is a bijection)."""
    field.check(lam)
    if lam.value == 0:
        raise ZeroElement("p^r-th root of zero requested")
    qm1 = field.q - 1
    if qm1 == 1:
        return lam
    return lam ** pow(pow(field.p, r, qm1), -1, qm1)


def nth_root_of(field: FieldSpec, lam: Felt, n: int):
    """Some x with x ** n == lam, or None when lam is not an n-th power."""
    field.check(lam)
    if lam.value == 0:
        raise ZeroElement("n-th root of zero requested")
    if n < 1:
        raise ValueError("n must be >= 1")
    qm1 = field.q - 1
    if qm1 == 1:
        return field.one
    L = lam.log()
    g = gcd(n, qm1)
    if L % g:
        return None
    mod = qm1 // g
    k = (L // g) * pow((n // g) % mod, -1, mod) % mod if mod > 1 else 0
    return field.gen_pow(k)
