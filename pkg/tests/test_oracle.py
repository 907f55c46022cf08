import itertools
import math

import pytest

from constacyclic.constacode import (
    code_from_generator, dual, enumerate_codes, generator_matrix, generator_rows, is_self_dual,
    shape_decompose,
)
from constacyclic.errors import RankDeficient, TooLarge
from constacyclic.field_core import make_field
from constacyclic.oracle import (
    ABOVE_CAP, CodewordSet, bruteforce_dual, check_matrix_selfdual, check_shift_closure,
    codeword_set, dual_basis, exhaustive_divisors, min_distance, nullspace, rank, rref,
    same_row_space, span,
)
from constacyclic.polyring import Poly


def full_space(F, n):
    return CodewordSet(F, n, frozenset(itertools.product(range(F.q), repeat=n)))


def zero_set(F, n):
    return CodewordSet(F, n, frozenset({(0,) * n}))


@pytest.fixture(scope="module")
def half_code():
    F = make_field(5)
    return code_from_generator(F, 10, -1, (Poly.x(F) - 2) ** 5)


def test_codeword_set_sizes(F5, half_code):
    assert len(codeword_set(half_code)) == 3125
    assert codeword_set(code_from_generator(F5, 4, 1, Poly.binomial(F5, 4, 1))) == zero_set(F5, 4)
    assert len(codeword_set(code_from_generator(F5, 2, 1, Poly(F5, [1])))) == 25
    with pytest.raises(TooLarge):
        codeword_set(code_from_generator(F5, 8, 1, Poly(F5, [1])))


def test_span_is_a_subspace(F9):
    rows = [(1, 2, 0, 5), (0, 1, 7, 3)]
    ws = span(F9, rows, 4)
    assert len(ws) == 81
    for u, v in itertools.islice(itertools.product(ws, ws), 500):
        assert tuple(F9.add(a, b) for a, b in zip(u, v)) in ws
    for u in ws:
        assert tuple(F9.mul(7, a) for a in u) in ws


def test_shift_closure_trivial(F5):
    assert check_shift_closure(zero_set(F5, 3), 2)
    assert check_shift_closure(full_space(F5, 3), 3)
    not_closed = span(F5, [(1, 0, 0)], 3)
    assert not check_shift_closure(not_closed, 1)


def test_bruteforce_dual_trivial(F5):
    assert bruteforce_dual(zero_set(F5, 3)) == full_space(F5, 3)
    assert bruteforce_dual(full_space(F5, 3)) == zero_set(F5, 3)


def test_bruteforce_dual_paths_agree(F5, half_code):
    ws = codeword_set(half_code)
    assert bruteforce_dual(ws) == ws  # null-space path: 5^10 is too many to scan
    c = code_from_generator(F5, 6, 1, Poly(F5, [-1, 1]))
    scanned = bruteforce_dual(codeword_set(c))  # 5^6 vectors scanned
    assert scanned == span(F5, nullspace(F5, generator_rows(c), 6), 6)


def test_matrix_selfdual(F5, half_code):
    assert check_matrix_selfdual(generator_matrix(half_code))
    whole = code_from_generator(F5, 4, 1, Poly(F5, [1]))
    assert not check_matrix_selfdual(generator_matrix(whole))
    with pytest.raises(RankDeficient):
        check_matrix_selfdual([(1, 2), (2, 4)], F5)


def test_n70_witness_matrix(F5):
    from constacyclic.selfdual_neg import selfdual_exists_structural

    w = selfdual_exists_structural(F5, shape_decompose(70, 5)).witness
    G = generator_rows(w)
    assert len(G) == 35 and check_matrix_selfdual(G, F5)


def test_matrix_and_polynomial_selfduality_agree(F9):
    for n in (2, 4, 6, 8):
        for lam in (F9(1), F9(-1)):
            for c in enumerate_codes(F9, shape_decompose(n, 3), lam):
                if c.dim:
                    assert check_matrix_selfdual(generator_rows(c), F9) == is_self_dual(c)


def test_min_distance(F5, half_code):
    # exhaustive count of minimum weight, compared to a direct scan of the words
    words = codeword_set(half_code).words
    direct = min(sum(1 for v in w if v) for w in words if any(w))
    assert min_distance(half_code) == direct == 2
    assert min_distance(half_code, cap=1) == ABOVE_CAP
    assert min_distance(code_from_generator(F5, 3, 1, Poly(F5, [1]))) == 1
    assert min_distance(code_from_generator(F5, 3, 1, Poly.binomial(F5, 3, 1))) == math.inf


def test_linear_algebra(F9):
    u, v = (1, 2, 3, 4), (0, 1, 0, 1)
    w = tuple(F9.add(F9.mul(5, a), F9.mul(7, b)) for a, b in zip(u, v))
    rows = [u, w, v]
    R, piv = rref(F9, rows)
    assert len(R) == rank(F9, rows) == 2 and piv == [0, 1]
    ns = nullspace(F9, rows, 4)
    assert len(ns) == 2
    for x in ns:
        for r in rows:
            acc = 0
            for a, b in zip(r, x):
                acc = F9.add(acc, F9.mul(a, b))
            assert acc == 0
    assert same_row_space(F9, rows, [u, v])
    assert not same_row_space(F9, rows, [u])
    assert rref(F9, []) == ([], [])


def test_dual_basis_matches_dual_code(F5):
    for c in enumerate_codes(F5, shape_decompose(12, 5), 2):
        d = dual(c)
        if c.dim and d.dim:
            assert same_row_space(F5, dual_basis(F5, generator_matrix(c), 12), generator_rows(d))


def test_exhaustive_divisors_small(F5):
    x = Poly.x(F5)
    divs = exhaustive_divisors(F5, 4, 1)
    assert len(divs) == 16
    assert x - 1 in divs and (x - 1) * (x + 1) in divs
    with pytest.raises(TooLarge):
        exhaustive_divisors(F5, 30, 1)
