"""Tests for exact cyclotomic field arithmetic."""

import random
from fractions import Fraction
from functools import reduce

import pytest

from regpart import CyclotomicNumber, PolyT, cyclotomic_polynomial, t_shifted_factorial

RANDOM_ELEMENTS_PER_ORDER = 10_000


class TestCyclotomicPolynomials:
    def test_known_polynomials(self):
        assert cyclotomic_polynomial(1) == PolyT([-1, 1])
        assert cyclotomic_polynomial(2) == PolyT([1, 1])
        assert cyclotomic_polynomial(3) == PolyT([1, 1, 1])
        assert cyclotomic_polynomial(4) == PolyT([1, 0, 1])
        assert cyclotomic_polynomial(6) == PolyT([1, -1, 1])
        assert cyclotomic_polynomial(12) == PolyT([1, 0, -1, 0, 1])

    def test_product_over_divisors(self):
        for r in range(1, 31):
            product = PolyT.one()
            for d in range(1, r + 1):
                if r % d == 0:
                    product = product * cyclotomic_polynomial(d)
            assert product == PolyT([-1] + [0] * (r - 1) + [1])


class TestBasicArithmetic:
    def test_order_two_root_is_minus_one(self):
        z = CyclotomicNumber.zeta(2)
        assert z == -1
        assert 1 - z == 2

    def test_root_power_relations(self):
        for r in range(2, 10):
            z = CyclotomicNumber.zeta(r)
            assert z ** r == 1
            for k in range(1, r):
                assert z ** k != 1

    def test_product_of_root_differences(self):
        for r in range(2, 11):
            z = CyclotomicNumber.zeta(r)
            product = reduce(lambda a, b: a * b, [1 - z ** i for i in range(1, r)])
            assert product == r

    def test_three_explicit(self):
        z = CyclotomicNumber.zeta(3)
        assert (1 - z) * (1 - z ** 2) == 3

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4)
        with pytest.raises(ValueError):
            CyclotomicNumber.zeta(3) * CyclotomicNumber.zeta(6)

    def test_zero_inverse_rejected(self):
        with pytest.raises(ZeroDivisionError):
            CyclotomicNumber.zero(5).inverse()

    def test_negative_powers(self):
        z = CyclotomicNumber.zeta(5)
        assert z ** -1 == z ** 4
        assert z ** -7 == z ** 3

    def test_order_below_two_rejected(self):
        with pytest.raises(ValueError):
            CyclotomicNumber(1, (1,))


def random_element(rng, order):
    degree = cyclotomic_polynomial(order).degree
    return CyclotomicNumber(
        order,
        tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(degree)),
    )


@pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
def test_random_field_axioms(order):
    rng = random.Random(1000 + order)
    pool = [random_element(rng, order) for _ in range(RANDOM_ELEMENTS_PER_ORDER)]
    one = CyclotomicNumber.one(order)
    size = len(pool)
    for i, x in enumerate(pool):
        y = pool[(7 * i + 1) % size]
        z = pool[(13 * i + 5) % size]
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inverse() == one


class TestConjugation:
    def test_conjugate_of_root(self):
        for r in (3, 4, 5, 6, 7):
            z = CyclotomicNumber.zeta(r)
            assert z.conjugate() == z ** (r - 1)

    def test_conjugation_is_multiplicative(self):
        rng = random.Random(99)
        for order in (3, 4, 5, 6):
            for _ in range(200):
                x = random_element(rng, order)
                y = random_element(rng, order)
                assert (x * y).conjugate() == x.conjugate() * y.conjugate()
                assert (x + y).conjugate() == x.conjugate() + y.conjugate()


class TestRationality:
    def test_rational_constant(self):
        x = CyclotomicNumber(5, (3,))
        assert x.is_real()
        assert x.as_rational() == 3

    def test_root_is_not_rational(self):
        for r in (3, 4, 5):
            z = CyclotomicNumber.zeta(r)
            assert z.as_rational() is None

    def test_real_but_irrational(self):
        z = CyclotomicNumber.zeta(5)
        x = z + z ** 4
        assert x.is_real()
        assert x.as_rational() is None
        # x satisfies a monic quadratic with no rational roots
        assert x * x + x - 1 == 0

    def test_order_two_is_rational(self):
        z = CyclotomicNumber.zeta(2)
        assert (1 - z).as_rational() == 2


class TestShiftedFactorial:
    def test_empty_product(self):
        z = CyclotomicNumber.zeta(4)
        assert t_shifted_factorial(z, z, 0) == 1

    def test_vanishes_at_order(self):
        for r in (2, 3, 4, 5):
            z = CyclotomicNumber.zeta(r)
            for n in range(r, r + 3):
                assert t_shifted_factorial(z, z, n).is_zero

    def test_explicit_order_three(self):
        z = CyclotomicNumber.zeta(3)
        assert t_shifted_factorial(z, z, 2) == 3

    def test_polynomial_argument(self):
        t = PolyT.t()
        assert t_shifted_factorial(t, t, 2) == (1 - t) * (1 - t ** 2)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            t_shifted_factorial(1, 1, -1)
