from math import gcd

import pytest

from constacyclic.constacode import (
    code_from_generator, enumerate_codes, generator_matrix, generator_rows, is_self_dual,
    shape_decompose,
)
from constacyclic.cyclo_factor import (
    cyclotomic_cosets, factor_binomial, minimal_polynomial, multiplicative_order,
)
from constacyclic.errors import FieldTooLarge, HypothesisViolated, TooLarge
from constacyclic.field_core import make_field
from constacyclic.oracle import check_matrix_selfdual, exhaustive_divisors
from constacyclic.polyring import Poly, product
from constacyclic.selfdual_neg import (
    classify_factors, consistency_report, enumerate_selfdual, oracle_selfdual_exists,
    paper_hypothesis_holds, selfdual_exists_paper, selfdual_exists_structural, symmetric_cosets,
)

FIELDS = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2), 11: (11, 1), 13: (13, 1), 17: (17, 1), 25: (5, 2)}


def field_q(q):
    return make_field(*FIELDS[q])


def exhaustive_selfdual(F, n):
    """Does any monic divisor of x^n + 1 of degree n/2 generate a self-dual code?"""
    if n % 2:
        return False
    try:
        gens = exhaustive_divisors(F, n, -1)
    except TooLarge:
        gens = {c.gen for c in enumerate_codes(F, shape_decompose(n, F.p), -1)}
    for g in gens:
        if 2 * g.degree == n:
            c = code_from_generator(F, n, -1, g)
            if check_matrix_selfdual(generator_rows(c), F):
                return True
    return False


# -- classification ----------------------------------------------------------

def test_classify_examples(F5):
    x = Poly.x(F5)
    c2 = classify_factors(F5, 2)
    assert c2.selfrec == () and c2.t == 1
    assert set(c2.pairs[0]) == {x - 2, x - 3}
    c14 = classify_factors(F5, 14)
    assert c14.s == 0 and c14.t == 2
    assert sorted(h.degree for h, _ in c14.pairs) == [1, 6]
    c1 = classify_factors(F5, 1)
    assert c1.selfrec == (x + 1,) and c1.t == 0


@pytest.mark.parametrize("q", [5, 9, 13, 25])
def test_classification_invariants(q):
    F = field_q(q)
    for M in range(1, 41):
        if M % F.p == 0:
            continue
        cls = classify_factors(F, M)
        for g in cls.selfrec:
            assert g.reciprocal(monic=True) == g
        for h, hs in cls.pairs:
            assert h.reciprocal(monic=True) == hs and h != hs
        flat = cls.flattened()
        assert product(flat, F) == Poly.binomial(F, M, -1)
        assert len(flat) == cls.s + 2 * cls.t == len(factor_binomial(F, M, -1))
        # self-reciprocal factors correspond to symmetric odd cosets mod 2M
        sym = symmetric_cosets(2 * M, q, odd_only=True)
        assert sorted(g.degree for g in cls.selfrec) == sorted(len(c) for c in sym)


@pytest.mark.parametrize("q,M", [(5, 2), (5, 3), (5, 6), (5, 7), (9, 5), (9, 7), (9, 10), (13, 3), (13, 6), (25, 7), (25, 3), (5, 14)])
def test_selfreciprocal_iff_symmetric_coset(q, M):
    F = field_q(q)
    cls = classify_factors(F, M)
    selfrec = set(cls.selfrec)
    odd = [c for c in cyclotomic_cosets(2 * M, q) if c.rep % 2]
    try:
        for c in odd:
            f = minimal_polynomial(F, 2 * M, c)
            assert (f in selfrec) == (c.negated() == c)
    except FieldTooLarge:
        pytest.skip("splitting field above the size cap")


def test_order_parity_vs_symmetric_cosets():
    for q in (3, 5, 7, 9, 11, 13, 25):
        for m in range(3, 61, 2):
            if gcd(m, q) != 1:
                continue
            even = multiplicative_order(q, m) % 2 == 0
            sym = any(c.rep != 0 and c.negated() == c for c in cyclotomic_cosets(m, q))
            assert even == sym, (q, m)


# -- existence -----------------------------------------------------------------

def test_structural_examples(F5, F9):
    v = selfdual_exists_structural(F5, shape_decompose(5, 5))
    assert not v.exists and v.obstruction == (Poly(F5, [1, 1]),)
    v = selfdual_exists_structural(F5, shape_decompose(70, 5))
    assert v.exists and v.witness.dim == 35 and is_self_dual(v.witness)
    assert check_matrix_selfdual(generator_matrix(v.witness))
    assert selfdual_exists_structural(F9, shape_decompose(126, 3)).exists


def test_paper_examples(F5, F9):
    v = selfdual_exists_paper(F5, shape_decompose(70, 5))
    assert (v.exists, v.ord_value) == (False, 6)
    v = selfdual_exists_paper(F9, shape_decompose(30, 3))
    assert (v.exists, v.ord_value) == (False, 2)
    v = selfdual_exists_paper(F9, shape_decompose(126, 3))
    assert (v.exists, v.ord_value) == (True, 3)


def test_paper_hypothesis(F5, F9):
    assert paper_hypothesis_holds(F5, shape_decompose(10, 5))
    assert not paper_hypothesis_holds(F5, shape_decompose(20, 5))  # 8 does not divide 4
    assert not paper_hypothesis_holds(F5, shape_decompose(35, 5))  # a = 0
    with pytest.raises(HypothesisViolated):
        selfdual_exists_paper(F5, shape_decompose(20, 5))
    with pytest.raises(ValueError):
        selfdual_exists_structural(F9, shape_decompose(10, 5))


def test_congruence_forces_existence():
    for q in (5, 9, 13, 17, 25):
        F = field_q(q)
        for a in range(1, 4):
            if (q - 1) % 2 ** (a + 1):
                continue
            for m in range(1, 16, 2):
                if gcd(m, q) != 1:
                    continue
                shape = shape_decompose(2**a * m, F.p)
                assert selfdual_exists_structural(F, shape).exists, (q, a, m)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_structural_matches_exhaustive_search(q):
    F = field_q(q)
    for n in range(1, 21):
        shape = shape_decompose(n, F.p)
        assert selfdual_exists_structural(F, shape).exists == exhaustive_selfdual(F, n), n


# -- enumeration -----------------------------------------------------------------

def test_enumerate_selfdual_examples(F5):
    x = Poly.x(F5)
    en = enumerate_selfdual(F5, shape_decompose(10, 5))
    gens = {c.gen for c in en}
    assert en.count == 6
    assert gens == {(x - 2) ** b * (x - 3) ** (5 - b) for b in range(6)}
    en = enumerate_selfdual(F5, shape_decompose(70, 5))
    assert en.count == 36
    for c in en:
        assert is_self_dual(c) and c.dim == 35
        assert check_matrix_selfdual(generator_matrix(c))
    assert enumerate_selfdual(F5, shape_decompose(5, 5)).count == 0
    assert list(enumerate_selfdual(F5, shape_decompose(5, 5))) == []


def test_enumerate_selfdual_is_complete(F9):
    # every self-dual code found by scanning all negacyclic codes is enumerated
    for n in (2, 4, 6, 8, 10, 12):
        shape = shape_decompose(n, 3)
        found = {c.gen for c in enumerate_codes(F9, shape, -1) if is_self_dual(c)}
        assert found == {c.gen for c in enumerate_selfdual(F9, shape)}


def test_enumerate_selfdual_limit(F25):
    en = enumerate_selfdual(F25, shape_decompose(1750, 5), limit=2)
    assert len(list(en)) == 2


# -- reports ---------------------------------------------------------------------

def test_consistency_reports(F5, F9):
    r = consistency_report(F5, shape_decompose(70, 5))
    assert r.status == "DISAGREE" and r.structural and r.paper is False and r.oracle
    assert "DISAGREE" in str(r) and r.conflicts
    r = consistency_report(F9, shape_decompose(30, 3))
    assert r.status == "DISAGREE" and r.oracle is True
    r = consistency_report(F9, shape_decompose(126, 3))
    assert r.status == "AGREE" and r.paper and r.structural


def test_report_without_paper_hypothesis(F5):
    r = consistency_report(F5, shape_decompose(12, 5))
    assert r.paper is None and r.status == "AGREE"
    assert r.oracle == r.structural


def test_oracle_search_limits(F5):
    assert oracle_selfdual_exists(F5, shape_decompose(7, 5)) == (False, None)
    assert oracle_selfdual_exists(F5, shape_decompose(70, 5), max_codes=3) is None
