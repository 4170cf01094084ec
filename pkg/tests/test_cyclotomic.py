from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from fishburn_lab.cyclotomic import (CyclotomicRational, b_zeta_bernoulli, b_zeta_theta,
                                     bernoulli_numbers, bernoulli_polynomial, c_array, c_n_zeta,
                                     component_derivative_at_one, eval_at_zeta, stirling2,
                                     verify_bernoulli_crosscheck, verify_component_vanishing,
                                     verify_lemma2, verify_lemma4, verify_stabilization)
from fishburn_lab.fishburn import partial_sum_F
from fishburn_lab.residues import residue_sets
from fishburn_lab.series import QQ, ZZ, Series

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def elements(p):
    return st.lists(fracs, min_size=p - 1, max_size=p - 1).map(lambda cs: CyclotomicRational(p, cs))


def numeric(x):
    """Complex value of x at exp(2 pi i / p), used only as an outside check."""
    import cmath
    z = cmath.exp(2j * cmath.pi / x.p)
    return sum(float(c) * z ** k for k, c in enumerate(x.coords))


# -- field arithmetic --------------------------------------------------------

def test_basis_reduction():
    p = 5
    assert CyclotomicRational.zeta(p, p - 1) == CyclotomicRational(p, [-1, -1, -1, -1])
    assert CyclotomicRational.zeta(p, p) == CyclotomicRational.one(p)
    total = sum((CyclotomicRational.zeta(p, k) for k in range(p)), CyclotomicRational.zero(p))
    assert total.is_zero()


@settings(max_examples=40)
@given(elements(7), elements(7), elements(7))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CyclotomicRational.zero(7)
    assert a * 1 == a


@settings(max_examples=30)
@given(elements(5), elements(5))
def test_product_matches_complex_evaluation(a, b):
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), max_size=25), st.lists(st.integers(-9, 9), max_size=25),
       st.sampled_from([3, 5, 7, 11]))
def test_eval_is_homomorphism(f, g, p):
    F, G = Series(ZZ, f), Series(ZZ, g)
    assert eval_at_zeta(F * G, p) == eval_at_zeta(F, p) * eval_at_zeta(G, p)
    assert eval_at_zeta(F + G, p) == eval_at_zeta(F, p) + eval_at_zeta(G, p)


def test_eval_examples():
    for p in (3, 5, 7, 11):
        assert eval_at_zeta(Series(ZZ, [1] * p), p).is_zero()
        assert eval_at_zeta(Series.monomial(ZZ, p), p) == CyclotomicRational.one(p)
    assert eval_at_zeta(partial_sum_F(4), 5) == CyclotomicRational(5, [9, -5, -3, 0])


def test_span_check():
    S = residue_sets(7).S
    inside = CyclotomicRational.from_powers(7, [3, 1, 2, 0, 0, 5])
    assert inside.in_span_of_powers(S)
    assert not CyclotomicRational.zeta(7, 3).in_span_of_powers(S)
    # zeta^6 = -(1 + ... + zeta^5) is not in the span of S(7) = {0,1,2,5} either
    assert not CyclotomicRational.zeta(7, 6).in_span_of_powers(S)


# -- Stirling tables ---------------------------------------------------------

def test_stirling_examples():
    c = stirling2(6)
    assert c[2][1] == 1 and c[2][2] == 1 and c[3][2] == 3
    assert all(c[n][n] == 1 for n in range(1, 7))
    for n in range(1, 7):
        for j in range(1, n + 1):
            assert c[n][j] == sympy.functions.combinatorial.numbers.stirling(n, j)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_c_array(p):
    C = c_array(p, 6)
    for i in range(p):
        assert C[1][i][1] == p
        assert C[2][i][0] == i ** 2
        for N in range(7):
            assert C[N][i][N] == p ** N
            assert C[N][i][N + 1] == 0
    assert C[0][0][0] == 1


# -- identity checks ---------------------------------------------------------

def test_lemma2_report():
    r = verify_lemma2(trials=50, max_n=5, seed=0)
    assert r.status == "verified" and r.checked_count == 50
    assert verify_lemma2(trials=10, max_n=5, seed=0).to_json() == verify_lemma2(trials=10, max_n=5, seed=0).to_json()


@pytest.mark.parametrize("p,n,N", [(3, 4, 3), (5, 9, 3), (7, 10, 2), (2, 6, 4)])
def test_lemma4(p, n, N):
    r = verify_lemma4(p, n, N)
    assert r.status == "verified" and r.checked_count == N + 1


def test_component_vanishing_examples():
    assert component_derivative_at_one(5, 0, 3) == 0 == component_derivative_at_one(5, 0, 4)
    assert all(component_derivative_at_one(7, 0, i) == 0 for i in (3, 4, 6))
    assert all(component_derivative_at_one(5, 2, i) == 0 for i in (3, 4))
    # pentagonal residues generally do not vanish
    assert component_derivative_at_one(5, 0, 0) == 9


@pytest.mark.parametrize("p", [5, 7, 11])
def test_component_vanishing_report(p):
    r = verify_component_vanishing(p, 3)
    assert r.status == "verified"
    assert r.checked_count == 4 * (p - len(residue_sets(p).S))


# -- Bernoulli ---------------------------------------------------------------

def test_bernoulli_examples():
    assert bernoulli_polynomial(0) == Series(QQ, [1])
    assert bernoulli_polynomial(1) == Series(QQ, [Fraction(-1, 2), 1])
    assert bernoulli_polynomial(2) == Series(QQ, [Fraction(1, 6), -1, 1])
    assert bernoulli_numbers(4)[4] == Fraction(-1, 30)


@pytest.mark.parametrize("k", range(0, 13))
def test_bernoulli_against_sympy(k):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.bernoulli(k, x), x).all_coeffs()[::-1]
    assert list(bernoulli_polynomial(k).coeffs) == [Fraction(int(c.p), int(c.q)) for c in expected]


@pytest.mark.parametrize("k", range(1, 9))
def test_bernoulli_difference(k):
    B = bernoulli_polynomial(k)
    for x in [Fraction(0), Fraction(1, 3), Fraction(-2), Fraction(5, 7)]:
        assert B(x + 1) - B(x) == k * x ** (k - 1)


def test_c_n_examples():
    assert c_n_zeta(0, 5) == CyclotomicRational(5, [9, -5, -3, 0])
    with pytest.raises(ValueError):
        c_n_zeta(0, 3)


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_c_n_pentagonal_support(p, n):
    assert c_n_zeta(n, p).in_span_of_powers(residue_sets(p).S)


def test_b0_anchor():
    anchor = CyclotomicRational(5, [9, -5, -3, 0])
    assert b_zeta_theta(0, 5) == anchor == b_zeta_bernoulli(0, 5)
    assert b_zeta_theta(0, 7) == eval_at_zeta(partial_sum_F(6), 7)


@pytest.mark.parametrize("p", [5, 7])
def test_crosscheck(p):
    r = verify_bernoulli_crosscheck(p, 2)
    assert r.status == "verified" and r.checked_count == 6


def test_crosscheck_p11_first_order():
    assert b_zeta_theta(1, 11) == b_zeta_bernoulli(1, 11)


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("nu", [0, 1, 2])
def test_b_values_pentagonal_support(p, nu):
    assert b_zeta_theta(nu, p).in_span_of_powers(residue_sets(p).S)


@pytest.mark.parametrize("p", [5, 7])
def test_stabilization(p):
    assert verify_stabilization(p, 2).status == "verified"


def test_stabilization_needs_full_window():
    # one step before the stable range the value still moves
    assert eval_at_zeta(partial_sum_F(3), 5) != eval_at_zeta(partial_sum_F(4), 5)
