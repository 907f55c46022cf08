"""Dense univariate polynomials over a :class:`~constacyclic.field_core.FieldSpec`.

Coefficients are kept as raw field encodings (ints), constant term first, with
no trailing zeros; the zero polynomial is the empty tuple and has degree -1.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    ZeroConstantTerm,
    ZeroPolynomial,
    ZeroScale,
)
from .field_core import FieldSpec, Felt

# below this many coefficient pairs schoolbook beats numpy's call overhead
_NUMPY_MIN_WORK = 2048


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _digit_table(field: FieldSpec) -> np.ndarray:
    tab = getattr(field, "_np_digits", None)
    if tab is None:
        v = np.arange(field.q, dtype=np.int64)
        cols = []
        for _ in range(field.s):
            cols.append(v % field.p)
            v = v // field.p
        tab = np.stack(cols, axis=1)
        field._np_digits = tab
    return tab


def _mul_numpy(field: FieldSpec, a, b) -> list:
    p, s = field.p, field.s
    if s == 1:
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
        return out.tolist()
    tab = _digit_table(field)
    A = tab[np.asarray(a)]
    B = tab[np.asarray(b)]
    C = np.zeros((len(a) + len(b) - 1, 2 * s - 1), dtype=np.int64)
    for u in range(s):
        for v in range(s):
            C[:, u + v] += np.convolve(A[:, u], B[:, v])
    C %= p
    f = field.modulus
    for d in range(2 * s - 2, s - 1, -1):
        top = C[:, d] % p
        for j in range(s):
            C[:, d - s + j] -= top * f[j]
        C[:, d - s : d] %= p
    C = C[:, :s] % p
    weights = p ** np.arange(s, dtype=np.int64)
    return (C @ weights).tolist()


def _mul_raw(field: FieldSpec, a, b) -> list:
    if not a or not b:
        return []
    if len(a) * len(b) >= _NUMPY_MIN_WORK and min(len(a), len(b)) > 4:
        return _mul_numpy(field, a, b)
    add, mul = field.add, field.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def _series_inverse(field: FieldSpec, g, k: int) -> list:
    """h with g*h = 1 mod x**k (Newton iteration); needs g[0] != 0."""
    h = [field.inv(g[0])]
    prec = 1
    two = field(2).value
    while prec < k:
        prec = min(2 * prec, k)
        gh = _mul_raw(field, list(g[:prec]), h)[:prec]
        gh += [0] * (prec - len(gh))
        e = [field.neg(v) for v in gh]
        e[0] = field.add(e[0], two)
        h = _mul_raw(field, h, e)[:prec]
    return h


class _Reducer:
    """Remainder modulo a fixed polynomial via a precomputed reversed inverse.

    Handles inputs of degree < 2 * deg(g); each reduction costs two
    multiplications instead of a schoolbook division.
    """

    def __init__(self, g):
        self.field = g.field
        self.g = list(g._c)
        self.d = len(self.g) - 1
        self.inv = _series_inverse(self.field, self.g[::-1], self.d)

    def __call__(self, r) -> list:
        field, d = self.field, self.d
        r = _trim(list(r))
        if len(r) <= d:
            return r
        k = len(r) - d
        qrev = _mul_raw(field, r[::-1][:k], self.inv[:k])[:k]
        qrev += [0] * (k - len(qrev))
        qg = _mul_raw(field, qrev[::-1], self.g)
        sub = field.sub
        return _trim([sub(r[i], qg[i]) for i in range(d)])


class Poly:
    """Immutable polynomial over a finite field."""

    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, Felt):
                field.check(c)
                vals.append(c.value)
            else:
                vals.append(field(c).value)
        self.field = field
        self._c = tuple(_trim(vals))

    @classmethod
    def _raw(cls, field: FieldSpec, vals) -> Poly:
        obj = cls.__new__(cls)
        obj.field = field
        obj._c = tuple(_trim(list(vals)))
        return obj

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldSpec, n: int, c=1) -> Poly:
        c = field(c).value
        return cls._raw(field, [0] * n + [c])

    @classmethod
    def constant(cls, field: FieldSpec, c) -> Poly:
        return cls._raw(field, [field(c).value])

    @classmethod
    def binomial(cls, field: FieldSpec, n: int, c) -> Poly:
        """x**n - c."""
        c = field(c).value
        vals = [0] * (n + 1)
        vals[n] = 1
        vals[0] = field.sub(vals[0], c)
        return cls._raw(field, vals)

    # -- accessors ----------------------------------------------------------

    @property
    def raw(self) -> tuple[int, ...]:
        return self._c

    @property
    def coeffs(self) -> tuple[Felt, ...]:
        return tuple(Felt(self.field, v) for v in self._c)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i: int) -> Felt:
        if 0 <= i < len(self._c):
            return Felt(self.field, self._c[i])
        return self.field.zero

    @property
    def lc(self) -> Felt:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return Felt(self.field, self._c[-1])

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def is_one(self) -> bool:
        return self._c == (1,)

    def sort_key(self):
        key = self.field.key
        return (self.degree, tuple(key(v) for v in self._c))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return other
        if isinstance(other, (Felt, int)):
            return Poly._raw(self.field, [self.field(other).value])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, v in enumerate(b):
            out[i] = add(out[i], v)
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Poly._raw(self.field, [neg(v) for v in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, _mul_raw(self.field, self._c, other._c))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise DivisionByZero("polynomial division by zero")
        field = self.field
        g = other._c
        dg = len(g) - 1
        r = list(self._c)
        if len(r) - 1 < dg:
            return Poly._raw(field, []), self
        if dg > 16 and len(r) - dg > 16 and len(r) * dg >= 4 * _NUMPY_MIN_WORK:
            k = len(r) - dg
            inv = _series_inverse(field, g[::-1], k)
            qrev = _mul_raw(field, r[::-1][:k], inv)[:k]
            qrev += [0] * (k - len(qrev))
            quot = Poly._raw(field, qrev[::-1])
            return quot, self - quot * other
        inv_lc = field.inv(g[-1])
        mul, sub = field.mul, field.sub
        quot = [0] * (len(r) - dg)
        for i in range(len(r) - 1 - dg, -1, -1):
            top = r[i + dg]
            if not top:
                continue
            c = mul(top, inv_lc)
            quot[i] = c
            for j in range(dg):
                if g[j]:
                    r[i + j] = sub(r[i + j], mul(c, g[j]))
            r[i + dg] = 0
        return Poly._raw(field, quot), Poly._raw(field, r[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly._raw(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, modulus: Poly) -> Poly:
        field = self.field
        if modulus.degree > 16:
            red = _Reducer(modulus)
            result = red(Poly._raw(field, [1])._c)
            base = red(list((self % modulus)._c))
            while e:
                if e & 1:
                    result = red(_mul_raw(field, result, base))
                e >>= 1
                if e:
                    base = red(_mul_raw(field, base, base))
            return Poly._raw(field, result)
        result = Poly._raw(field, [1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __call__(self, point) -> Felt:
        """Evaluate at a field element (Horner)."""
        field = self.field
        x = field(point).value
        add, mul = field.add, field.mul
        acc = 0
        for c in reversed(self._c):
            acc = add(mul(acc, x), c)
        return Felt(field, acc)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c and (
                self.field is other.field or self.field == other.field
            )
        if isinstance(other, (int, Felt)):
            return self._c == Poly._raw(self.field, [self.field(other).value])._c
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self._c))

    # -- structural operations ---------------------------------------------

    def derivative(self) -> Poly:
        field = self.field
        out = [field.mul(field(i).value, v) for i, v in enumerate(self._c)][1:]
        return Poly._raw(field, out)

    def monic(self) -> Poly:
        if not self._c:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        if self._c[-1] == 1:
            return self
        field = self.field
        inv = field.inv(self._c[-1])
        return Poly._raw(field, [field.mul(v, inv) for v in self._c])

    def scaled(self, c) -> Poly:
        """f(c*x)."""
        field = self.field
        c = field(c).value
        if c == 0:
            raise ZeroScale("scale factor must be nonzero")
        out = []
        power = 1
        for v in self._c:
            out.append(field.mul(v, power))
            power = field.mul(power, c)
        return Poly._raw(field, out)

    def reciprocal(self, monic: bool = False) -> Poly:
        """x**deg(f) * f(1/x): the coefficient vector reversed."""
        if not self._c:
            raise ZeroPolynomial("reciprocal of the zero polynomial")
        if self._c[0] == 0:
            raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
        out = Poly._raw(self.field, self._c[::-1])
        return out.monic() if monic else out

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            v = self._c[i]
            if not v:
                continue
            c = repr(Felt(self.field, v))
            if i == 0:
                terms.append(c)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if v == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    g = f._coerce(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def poly_arithmetic(f: Poly, g, kind: str):
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "divrem":
        return divmod(f, g)
    if kind == "gcd":
        return poly_gcd(f, g)
    if kind == "pow":
        return f**g
    if kind == "eval":
        return f(g)
    raise ValueError(f"unknown operation {kind!r}")


def substitute_scaled(f: Poly, c) -> Poly:
    return f.scaled(c)


def reciprocal(f: Poly, monic: bool = False) -> Poly:
    return f.reciprocal(monic=monic)


def monicize(f: Poly) -> Poly:
    return f.monic()


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    return poly_gcd(f, f.derivative()).is_one()


def product(polys, field: FieldSpec) -> Poly:
    """Product of an iterable of polynomials, multiplied smallest-first."""
    items = sorted(polys, key=len)
    if not items:
        return Poly._raw(field, [1])
    # balanced pairwise products keep the numpy path busy
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]
