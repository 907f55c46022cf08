import itertools

import pytest
from hypothesis import given, settings, strategies as st

from constacyclic.errors import (
    CompositeP, DivisionByZero, FieldMismatch, FieldTooLarge, NoSuchRoot,
    ReducibleModulus, ZeroElement,
)
from constacyclic.field_core import (
    default_modulus, element_order, fq_arithmetic, is_irreducible_mod_p,
    make_field, nth_root_of, prth_root, root_of_unity,
)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2), (5, 2), (2, 4), (7, 2)]


def naive_mul(a, b, modulus, p):
    """Schoolbook product of coordinate vectors reduced by a monic modulus."""
    s = len(modulus) - 1
    prod = [0] * (2 * s)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, s - 1, -1):
        c = prod[k]
        if c:
            for i in range(s + 1):
                prod[k - s + i] = (prod[k - s + i] - c * modulus[i]) % p
    return tuple(prod[:s])


# -- examples ----------------------------------------------------------------

def test_gf25_default_modulus_and_generator(F25):
    assert F25.modulus == (1, 1, 1)
    assert F25.generator.coeffs == (1, 3)
    assert element_order(F25.generator) == 24


def test_prime_field_generators():
    assert make_field(5).generator.value == 2
    assert make_field(7).generator.value == 3
    assert make_field(13).generator.value == 2


def test_f9_modulus(F9):
    assert F9.modulus == (1, 0, 1)


def test_integer_embedding_vs_encoding(F25):
    assert F25(7) == F25(2)
    assert F25.from_int(7).coeffs == (2, 1)
    assert F25(-1) + F25.one == F25.zero


def test_make_field_is_cached():
    assert make_field(5, 2) is make_field(5, 2)


@pytest.mark.parametrize("p,s,err", [(6, 1, CompositeP), (1, 1, CompositeP), (2, 20, FieldTooLarge)])
def test_make_field_rejects(p, s, err):
    with pytest.raises(err):
        make_field(p, s)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(5, 2, [4, 0, 1])  # x^2 - 1


def test_custom_modulus():
    F = make_field(5, 2, [2, 0, 1])  # x^2 + 2
    assert F.modulus == (2, 0, 1)
    assert element_order(F.generator) == 24


def test_zero_errors(F25):
    with pytest.raises(DivisionByZero):
        F25.one / F25.zero
    with pytest.raises(ZeroDivisionError):
        F25.zero.inv()
    with pytest.raises(ZeroElement):
        F25.zero.log()
    with pytest.raises(ZeroElement):
        element_order(F25.zero)


def test_field_mismatch(F5, F25):
    with pytest.raises(FieldMismatch):
        F5.one + F25.one
    with pytest.raises(FieldMismatch):
        F5.one == F25.one


def test_fq_arithmetic_dispatch(F25):
    a, b = F25.gen_pow(3), F25.gen_pow(5)
    assert fq_arithmetic(a, b, "mul") == F25.gen_pow(8)
    assert fq_arithmetic(a, b, "div") == F25.gen_pow(-2)
    assert fq_arithmetic(a, 4, "pow") == F25.gen_pow(12)
    assert fq_arithmetic(a, None, "inv") == F25.gen_pow(21)
    with pytest.raises(ValueError):
        fq_arithmetic(a, b, "xor")


def test_root_of_unity(F25):
    assert element_order(root_of_unity(F25, 8)) == 8
    with pytest.raises(NoSuchRoot):
        root_of_unity(F25, 7)


def test_nth_root_for_long_length(F25):
    lam = F25.gen_pow(2)
    d = nth_root_of(F25, lam, 1750)
    assert d == F25.gen_pow(11)
    assert d**1750 == lam
    assert nth_root_of(F25, F25.generator, 2) is None


# -- invariants against an independent model ----------------------------------

@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_multiplication_matches_schoolbook(p, s):
    F = make_field(p, s)
    for a, b in itertools.product(range(F.q), repeat=2):
        expect = naive_mul(F.digits(a), F.digits(b), F.modulus, p)
        assert F.digits(F.mul(a, b)) == expect


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_addition_is_coordinatewise(p, s):
    F = make_field(p, s)
    for a, b in itertools.product(range(F.q), repeat=2):
        expect = tuple((x + y) % p for x, y in zip(F.digits(a), F.digits(b)))
        assert F.digits(F.add(a, b)) == expect


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_inverse_and_log_tables(p, s):
    F = make_field(p, s)
    for x in F.units():
        assert x * x.inv() == F.one
        assert F.gen_pow(x.log()) == x
    assert len({F.gen_pow(k) for k in range(F.q - 1)}) == F.q - 1


@pytest.mark.parametrize("p,s", SMALL_FIELDS + [(3, 3), (11, 2)])
def test_default_modulus_is_smallest_irreducible(p, s):
    mod = default_modulus(p, s)
    assert is_irreducible_mod_p(mod, p)
    for low in itertools.product(range(p), repeat=s):
        cand = tuple(low) + (1,)
        if cand == mod:
            break
        assert not is_irreducible_mod_p(cand, p)


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_generator_is_smallest_primitive(p, s):
    F = make_field(p, s)
    for x in F.units():
        if element_order(x) == F.q - 1:
            assert x == F.generator
            break


def test_irreducibility_by_root_count():
    # degree <= 3 over F_p: irreducible iff no root
    for p in (2, 3, 5):
        for d in (2, 3):
            for low in itertools.product(range(p), repeat=d):
                f = tuple(low) + (1,)
                has_root = any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))
                assert is_irreducible_mod_p(f, p) == (not has_root)


@pytest.mark.parametrize("p,s", [(5, 1), (3, 2), (5, 2), (7, 2), (2, 4)])
def test_nth_root_exhaustive(p, s):
    F = make_field(p, s)
    for n in range(1, 13):
        powers = {x**n for x in F.units()}
        for lam in F.units():
            d = nth_root_of(F, lam, n)
            if lam in powers:
                assert d is not None and d**n == lam
            else:
                assert d is None


@pytest.mark.parametrize("p,s", [(5, 1), (3, 2), (5, 2), (2, 3)])
def test_prth_root_exhaustive(p, s):
    F = make_field(p, s)
    for r in range(4):
        for lam in F.units():
            assert prth_root(F, lam, r) ** (p**r) == lam


@pytest.mark.parametrize("p,s", [(5, 1), (3, 2), (5, 2), (7, 1), (13, 1), (17, 1)])
def test_root_of_unity_orders(p, s):
    F = make_field(p, s)
    for n in range(1, F.q):
        if (F.q - 1) % n == 0:
            assert element_order(root_of_unity(F, n)) == n


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(5, 2), (3, 3), (7, 2), (2, 5)]), st.data())
def test_field_axioms(ps, data):
    F = make_field(*ps)
    el = st.integers(0, F.q - 1).map(F.from_int)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert a * F.one == a
    assert a**F.q == a
