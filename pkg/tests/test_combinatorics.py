import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mpf

from polyzeta.combinatorics import (
    A_coeff,
    K_mzv_combination,
    K_symbolic,
    L_symbolic,
    M_symbolic,
    a_weight,
    a_weight_bruteforce,
    binomial_sum_identity_check,
    corollary7_check,
    prop3_check,
    ramanujan_bruteforce,
    ramanujan_check,
)
from polyzeta.kernel import DomainError
from polyzeta.polytope import I_n_numeric, K_mn_numeric
from polyzeta.symbolic import (
    canonicalize,
    i_n_reduce,
    known_half_values,
    li_half_atom,
    ln2_atom,
    pi_atom,
    substitute,
    zeta_atom,
)

D = 30
Z = zeta_atom


# ---------------------------------------------------------------------------
# weights a_{m,p}

@pytest.mark.parametrize("m, p", [(m, p) for m in range(2, 7) for p in range(9)])
def test_a_weight_matches_enumeration(m, p):
    assert a_weight(m, p) == a_weight_bruteforce(m, p)


def test_a_weight_closed_forms():
    for p in range(13):
        assert a_weight(2, p) == 1
        assert a_weight(3, p) == 4 * 2 ** p - 2
        assert a_weight(4, p) == 27 * 3 ** p - 24 * 2 ** p + 3


def test_a_weight_domain():
    with pytest.raises(DomainError):
        a_weight(1, 0)


def test_recurrence_examples():
    assert prop3_check(2, 0)
    assert a_weight(3, 0) + 2 * a_weight(2, 1) == 4
    assert prop3_check(3, 0)
    lhs = sum(math.comb(3, t) * a_weight(4 - t, 3 + t) for t in range(3))
    assert lhs == 3 ** 6 and prop3_check(4, 3)


@pytest.mark.parametrize("m", range(2, 9))
def test_recurrence_table(m):
    assert all(prop3_check(m, p) for p in range(11))


@given(st.integers(2, 6), st.integers(0, 6))
def test_recurrence_via_enumeration(m, p):
    # same identity with every weight from the brute-force enumeration
    lhs = sum(math.comb(m - 1, t) * a_weight_bruteforce(m - t, p + t) for t in range(m - 1))
    assert lhs == (m - 1) ** (m + p - 1)


# ---------------------------------------------------------------------------
# A coefficients

def test_a_coeff_examples():
    assert A_coeff((3,)) == Fraction(1, 6)
    assert A_coeff((0, 0)) == 1
    assert A_coeff((1, 1)) == Fraction(1, 2)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_a_coeff_structure(ks):
    value = A_coeff(ks)
    assert value > 0
    # partial-sum product recomputed from scratch
    denom = math.prod(math.factorial(k) for k in ks)
    for j in range(1, len(ks)):
        denom *= sum(ks[len(ks) - j:]) + j
    assert value == Fraction(1, denom)


def test_a_coeff_domain():
    with pytest.raises(DomainError):
        A_coeff(())
    with pytest.raises(DomainError):
        A_coeff((1, -1))


# ---------------------------------------------------------------------------
# K_{m,n}

@pytest.mark.parametrize("m", range(2, 7))
def test_k_zero_is_factorial_zeta(m):
    poly, _ = K_symbolic(m, 0)
    assert poly == Z(m) * math.factorial(m - 1)


@pytest.mark.parametrize("n", range(7))
def test_k_two_is_i_n(n):
    poly, _ = K_symbolic(2, n)
    assert canonicalize(poly) == canonicalize(i_n_reduce(n))


@pytest.mark.parametrize("m, n", [(2, 3), (3, 2), (4, 4), (5, 1)])
def test_k_combination_weight(m, n):
    assert all(idx.weight == m + n for _, idx in K_mzv_combination(m, n))


def test_k31_cross_oracle():
    poly, _ = K_symbolic(3, 1)
    assert poly == Z(4) * Fraction(13, 2)
    assert abs(poly.evaluate(D) - K_mn_numeric(3, 1, D)) < 1e-8


@pytest.mark.parametrize("n", [2, 3])
def test_k3n_cross_oracle(n):
    poly, _ = K_symbolic(3, n)
    assert abs(poly.evaluate(D) - K_mn_numeric(3, n, D)) < 1e-15


def test_weight_cap():
    with pytest.raises(DomainError):
        K_symbolic(6, 6)
    with pytest.raises(DomainError):
        M_symbolic(5, 6, weight_cap=10)
    poly, _ = K_symbolic(6, 6, weight_cap=12)
    assert poly.is_homogeneous(12)


# ---------------------------------------------------------------------------
# M_{m,n} and L_m

def test_m_examples():
    l2, l3 = ln2_atom(), ln2_atom(3)
    assert M_symbolic(2, 0) == Z(2) * 2 - ln2_atom(2) - li_half_atom(2) * 2
    expected = Z(3) * 6 - l3 * 2 - li_half_atom(3) * 6 - l2 * li_half_atom(2) * 6
    assert M_symbolic(3, 0) == expected
    assert L_symbolic(2) == M_symbolic(2, 0)
    assert L_symbolic(3) == M_symbolic(3, 0)


@pytest.mark.parametrize("n", range(6))
def test_m2_equals_i_n(n):
    assert abs(M_symbolic(2, n).evaluate(D) - I_n_numeric(n, D)) < 1e-20


def test_l_values_after_substitution():
    half = known_half_values()
    assert substitute(L_symbolic(2), half) == Z(2)
    assert substitute(L_symbolic(3), half) == Z(3) * Fraction(3, 4)
    pi, l = pi_atom(), ln2_atom()
    l4 = (pi ** 4 * Fraction(4, 15) - l ** 4 + pi ** 2 * l ** 2 - Z(3) * l * 21
          - li_half_atom(4) * 24)
    assert canonicalize(substitute(L_symbolic(4), half)) == l4


def test_l_values_numeric():
    z2, z3, ln2 = mpmath.zeta(2), mpmath.zeta(3), +mpmath.ln2
    assert abs(L_symbolic(2).evaluate(D) - z2) < 1e-20
    assert abs(L_symbolic(3).evaluate(D) - Fraction(3, 4) * z3) < 1e-20
    li2 = mpmath.polylog(2, mpf(1) / 2)
    assert abs(li2 - (z2 / 2 - ln2 ** 2 / 2)) < 1e-40


# ---------------------------------------------------------------------------
# polylog / MZV relations

@pytest.mark.parametrize("n", range(7))
def test_polylog_mzv_relation(n):
    _, _, delta = corollary7_check(n, D)
    assert abs(delta) <= 1e-20


def test_polylog_mzv_relation_n1_display():
    lhs, _, _ = corollary7_check(1, D)
    assert abs(lhs - (-(+mpmath.ln2) ** 3 / 2 + mpmath.zeta(3))) < 1e-25


def test_polylog_mzv_relation_domain():
    with pytest.raises(DomainError):
        corollary7_check(7, D)


@pytest.mark.parametrize("n", range(11))
def test_binomial_sum_identity(n):
    assert binomial_sum_identity_check(n)


def test_binomial_sum_identity_n1_by_hand():
    assert Fraction(1, 1) + Fraction(1, 2) == Fraction(4 - 1, 2)


def test_ramanujan_sum():
    lhs, rhs, delta = ramanujan_check(D)
    assert abs(delta) <= 1e-20
    # direct partial sum; the tail after r = 200 is below 2^-200
    assert abs(ramanujan_bruteforce(200, D) - lhs) < 1e-25
