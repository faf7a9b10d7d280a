from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from abelian_moduli.cyclotomic import (
    CyclotomicSum,
    RootOfUnity,
    cyclotomic_polynomial,
    double_pole_sum,
    lemma7_sum,
    single_pole_sum,
    unit_root_pair_sum,
)
from abelian_moduli.errors import DomainError, NotRationalError, OrderOverflowError
from abelian_moduli.poly import P


def direct(kind, n):
    total = mpmath.mpc(0)
    for j in range(1, n):
        x = mpmath.expjpi(mpmath.mpf(2 * j) / n)
        total += 1 / (1 - x) if kind == "simple" else x / (1 - x) ** 2
    return total


@pytest.mark.parametrize("kind", ["simple", "double_pole"])
@mpmath.workprec(200)
def test_closed_forms_against_direct_sums(kind):
    for n in range(2, 201):
        exact = lemma7_sum(kind, n)
        approx = direct(kind, n)
        ref = mpmath.mpf(exact.numerator) / exact.denominator
        assert abs(approx - ref) / abs(ref) < 1e-9, n
        assert abs(approx.imag) < 1e-40


def test_closed_form_values():
    assert lemma7_sum("simple", 4) == Fraction(3, 2)
    assert lemma7_sum("double_pole", 4) == Fraction(-5, 4)
    assert lemma7_sum("double_pole", P**2) == -(P**4 - 1) / 12


@pytest.mark.parametrize("n", [4, 6, 9, 25])
def test_closed_forms_against_exact_cyclotomic_sums(n):
    roots = [RootOfUnity(n, j) for j in range(1, n)]
    # the inverse of xi^j runs over the same set
    assert single_pole_sum(roots) == lemma7_sum("simple", n)
    assert double_pole_sum(roots) == lemma7_sum("double_pole", n)


def test_domain():
    with pytest.raises(DomainError):
        lemma7_sum("simple", 1)
    with pytest.raises(ValueError):
        lemma7_sum("triple", 5)


@pytest.mark.parametrize("n, coeffs", [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@given(st.integers(2, 60), st.data())
def test_inv_one_minus_is_an_inverse(n, data):
    e = data.draw(st.integers(1, n - 1))
    one_minus = CyclotomicSum(n, {0: Fraction(1), e: Fraction(-1)})
    assert (one_minus * CyclotomicSum.inv_one_minus(n, e)).reduced() == CyclotomicSum(n, {0: 1}).reduced()


@given(st.integers(2, 40), st.data())
def test_complex_value_matches_exact(n, data):
    e = data.draw(st.integers(1, n - 1))
    inv = CyclotomicSum.inv_one_minus(n, e)
    expected = 1 / (1 - complex(RootOfUnity(n, e)))
    assert abs(complex(inv) - expected) < 1e-9 * max(1, abs(expected))


def test_pair_sums_against_mpmath():
    i, mi = RootOfUnity(4, 1), RootOfUnity(4, 3)
    minus_one = RootOfUnity(2, 1)
    elements = [(minus_one, mi), (minus_one, i)]
    exact = unit_root_pair_sum(elements)
    approx = sum(1 / ((1 - 1 / complex(a)) * (1 - 1 / complex(b))) for a, b in elements)
    assert exact == Fraction(1, 2)
    assert abs(approx - 0.5) < 1e-12


def test_signs():
    rho, rho2 = RootOfUnity(3, 1), RootOfUnity(3, 2)
    assert unit_root_pair_sum([(rho, rho2), (rho2, rho)], [1, -1]) == 0
    with pytest.raises(ValueError):
        unit_root_pair_sum([(rho, rho2)], [2])


def test_not_rational():
    with pytest.raises(NotRationalError):
        single_pole_sum([RootOfUnity(3, 1)])


def test_order_overflow():
    with pytest.raises(OrderOverflowError):
        single_pole_sum([RootOfUnity(101, 1), RootOfUnity(103, 1)])
    with pytest.raises(OrderOverflowError):
        CyclotomicSum(10_007)


def test_trivial_root_rejected():
    with pytest.raises(ZeroDivisionError):
        CyclotomicSum.inv_one_minus(6, 6)
