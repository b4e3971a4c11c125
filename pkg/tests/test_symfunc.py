"""Tests for symmetric functions, the one-parameter families at roots of
unity, inner products, and transition matrices."""

from fractions import Fraction

import pytest

from oracles import hook_dimension
from regpart import (
    GENERIC_T,
    CyclotomicNumber,
    Partition,
    PolyT,
    SymFunc,
    b_poly,
    bareiss_determinant,
    character,
    class_regular_partitions,
    complete_homogeneous_in_p,
    glaisher_exponent,
    hall_inner,
    hl_p,
    hl_q,
    hl_qprime,
    inverse_kostka_matrix,
    part_product,
    partitions,
    pochhammer_t,
    power_substitution,
    r_reduce,
    regular_partitions,
    schur_in_p,
    specialize,
    transition_matrix,
    z_factor,
    z_factor_at_root,
    z_factor_generic,
)

P = Partition
half = Fraction(1, 2)


class TestSymFuncAlgebra:
    def test_zero_coefficients_are_dropped(self):
        f = SymFunc(2, {P((2,)): Fraction(0), P((1, 1)): Fraction(1)})
        assert list(f.coeffs) == [P((1, 1))]

    def test_weight_mismatch_rejected(self):
        with pytest.raises(ValueError):
            SymFunc(3, {P((2,)): Fraction(1)})

    def test_addition_and_scaling(self):
        f = SymFunc.power_sum(P((2,)))
        g = SymFunc.power_sum(P((1, 1)))
        s = f + g.scale(2)
        assert s.coefficient(P((2,))) == 1
        assert s.coefficient(P((1, 1))) == 2
        assert (f - f).is_zero

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            SymFunc.power_sum(P((2,))) + SymFunc.power_sum(P((3,)))

    def test_product_unions_indices(self):
        f = SymFunc.power_sum(P((2,)))
        g = SymFunc.power_sum(P((2, 1)))
        assert (f * g).coefficient(P((2, 2, 1))) == 1

    def test_support_is_canonical(self):
        f = SymFunc(3, {P((1, 1, 1)): Fraction(1), P((3,)): Fraction(1)})
        assert f.support() == [P((3,)), P((1, 1, 1))]


class TestZFactors:
    def test_values(self):
        assert z_factor(P((2, 1, 1))) == 4
        for n in range(1, 8):
            assert z_factor(P((n,))) == n
        assert z_factor(P(())) == 1

    def test_at_root(self):
        z3 = CyclotomicNumber.zeta(3)
        value = z_factor_at_root(P((1,)), z3)
        assert value == 1 * (1 - z3).inverse()

    def test_pole_detection(self):
        z3 = CyclotomicNumber.zeta(3)
        with pytest.raises(ValueError):
            z_factor_at_root(P((3, 1)), z3)

    def test_generic(self):
        t = PolyT.t()
        from regpart import PolyFraction

        assert z_factor_generic(P((1,))) == PolyFraction(PolyT.one(), 1 - t)


class TestCharacters:
    def test_trivial_row(self):
        for n in range(1, 8):
            for rho in partitions(n):
                assert character(P((n,)), rho) == 1

    def test_sign_row(self):
        for n in range(1, 8):
            for rho in partitions(n):
                assert character(P((1,) * n), rho) == (-1) ** (n - rho.length)

    def test_dimensions_match_hook_formula(self):
        for n in range(1, 8):
            ones = P((1,) * n)
            for lam in partitions(n):
                assert character(lam, ones) == hook_dimension(lam)

    def test_known_value(self):
        assert character(P((2, 1)), P((1, 1, 1))) == 2

    def test_weight_mismatch(self):
        with pytest.raises(ValueError):
            character(P((2,)), P((1,)))


class TestSchurExpansion:
    def test_degree_one(self):
        assert schur_in_p(P((1,))) == SymFunc.power_sum(P((1,)))

    def test_degree_two(self):
        s2 = schur_in_p(P((2,)))
        assert s2.coefficient(P((2,))) == half
        assert s2.coefficient(P((1, 1))) == half
        s11 = schur_in_p(P((1, 1)))
        assert s11.coefficient(P((2,))) == -half
        assert s11.coefficient(P((1, 1))) == half

    @pytest.mark.parametrize("n", range(1, 6))
    def test_hall_orthonormality(self, n):
        for lam in partitions(n):
            for mu in partitions(n):
                expected = 1 if lam == mu else 0
                assert hall_inner(schur_in_p(lam), schur_in_p(mu), 0) == expected


class TestHomogeneousAndPlethysm:
    def test_h1_is_p1(self):
        assert complete_homogeneous_in_p(1) == SymFunc.power_sum(P((1,)))

    def test_substitution_of_squares(self):
        h1 = complete_homogeneous_in_p(1)
        assert power_substitution(h1, 2) == SymFunc.power_sum(P((2,)))
        h2 = power_substitution(complete_homogeneous_in_p(2), 2)
        assert h2.coefficient(P((4,))) == half
        assert h2.coefficient(P((2, 2))) == half
        assert len(h2.coeffs) == 2

    def test_power_sum_index_scaling(self):
        f = SymFunc.power_sum(P((2, 1)))
        assert power_substitution(f, 3) == SymFunc.power_sum(P((6, 3)))


class TestReduction:
    def test_drops_divisible_indices(self):
        f = SymFunc.power_sum(P((3, 1)))
        assert r_reduce(f, 3).is_zero

    def test_keeps_admissible_indices(self):
        f = SymFunc.power_sum(P((2, 1, 1)))
        assert r_reduce(f, 3) == f


class TestHallLittlewoodFamilies:
    def test_qprime_of_single_row_is_schur(self):
        for n in range(1, 6):
            expected = schur_in_p(P((n,))).map_coefficients(PolyT.coerce)
            assert hl_qprime(P((n,))) == expected

    def test_qprime_degree_two(self):
        t = PolyT.t()
        qp = hl_qprime(P((1, 1)))
        # s_(1,1) + t * s_(2) in power sums
        assert qp.coefficient(P((2,))) == -half + half * t
        assert qp.coefficient(P((1, 1))) == half + half * t

    def test_qprime_specializations(self):
        z2 = CyclotomicNumber.zeta(2)
        qp = specialize(hl_qprime(P((1, 1))), z2)
        assert qp == SymFunc(2, {P((2,)): CyclotomicNumber(2, -1)})
        z3 = CyclotomicNumber.zeta(3)
        qp3 = specialize(hl_qprime(P((1, 1))), z3)
        assert qp3.coefficient(P((2,))) == (z3 - 1) * CyclotomicNumber(3, half)
        assert qp3.coefficient(P((1, 1))) == (z3 + 1) * CyclotomicNumber(3, half)

    def test_p_at_column_is_schur_column(self):
        for n in range(1, 6):
            assert hl_p(P((1,) * n)) == schur_in_p(P((1,) * n)).map_coefficients(
                PolyT.coerce
            )

    def test_b_poly(self):
        t = PolyT.t()
        assert b_poly(P((1, 1))) == (1 - t) * (1 - t ** 2)
        assert b_poly(P((3, 2, 1))) == pochhammer_t(1) ** 3
        assert b_poly(P(())) == PolyT.one()

    def test_q_vanishes_at_minus_one_with_repeated_part(self):
        z2 = CyclotomicNumber.zeta(2)
        for lam in [P((1, 1)), P((2, 2)), P((2, 1, 1)), P((3, 1, 1))]:
            assert specialize(hl_q(lam), z2).is_zero

    def test_specialize_keeps_constants(self):
        z3 = CyclotomicNumber.zeta(3)
        f = SymFunc(2, {P((2,)): PolyT(3)})
        assert specialize(f, z3) == SymFunc(
            2, {P((2,)): CyclotomicNumber.from_rational(3, 3)}
        )


class TestInnerProducts:
    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_p_q_orthonormal_at_root(self, r, n):
        zeta = CyclotomicNumber.zeta(r)
        rp = regular_partitions((r,), n)
        for lam in rp:
            for mu in rp:
                value = hall_inner(
                    specialize(hl_p(lam), zeta), specialize(hl_q(mu), zeta), zeta
                )
                assert value == (1 if lam == mu else 0)

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_p_qprime_dual_under_hall_product(self, r, n):
        zeta = CyclotomicNumber.zeta(r)
        rp = regular_partitions((r,), n)
        for lam in rp:
            for mu in rp:
                value = hall_inner(
                    specialize(hl_p(lam), zeta),
                    r_reduce(specialize(hl_qprime(mu), zeta), r),
                    0,
                )
                assert value == (1 if lam == mu else 0)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_p_q_orthonormal_generic(self, n):
        for lam in partitions(n):
            for mu in partitions(n):
                value = hall_inner(hl_p(lam), hl_q(mu), GENERIC_T)
                assert value == (1 if lam == mu else 0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_cauchy_duality_as_polynomials(self, n):
        for lam in partitions(n):
            for mu in partitions(n):
                value = hall_inner(hl_p(lam), hl_qprime(mu), 0)
                assert value == (1 if lam == mu else 0)

    def test_pole_propagates(self):
        z2 = CyclotomicNumber.zeta(2)
        f = SymFunc.power_sum(P((2,)))
        with pytest.raises(ValueError):
            hall_inner(f, f, z2)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            hall_inner(SymFunc.power_sum(P((1,))), SymFunc.power_sum(P((2,))), 0)


class TestKnownExpansions:
    def test_schur_in_dual_basis_weight_four(self):
        """The five expansions of Schur functions in the Hall duals at t = -1."""
        z2 = CyclotomicNumber.zeta(2)
        ps = partitions(4)
        inverse = inverse_kostka_matrix(4)
        expected_rows = {
            P((4,)): {P((4,)): 1},
            P((3, 1)): {P((3, 1)): 1, P((4,)): 1},
            P((2, 2)): {P((2, 2)): 1, P((3, 1)): 1},
            P((2, 1, 1)): {P((2, 1, 1)): 1, P((2, 2)): 1, P((3, 1)): 1, P((4,)): 1},
            P((1, 1, 1, 1)): {
                P((1, 1, 1, 1)): 1,
                P((2, 1, 1)): 1,
                P((2, 2)): -1,
                P((4,)): 1,
            },
        }
        for li, lam in enumerate(ps):
            # coefficients of the expansion are the transposed inverse entries
            row = {}
            for mi, mu in enumerate(ps):
                value = inverse[mi][li](z2)
                if value:
                    row[mu] = value.as_rational()
            assert row == {k: Fraction(v) for k, v in expected_rows[lam].items()}
            # and the expansion reconstructs the Schur function exactly
            acc = SymFunc.zero(4)
            for mi, mu in enumerate(ps):
                coeff = inverse[mi][li](z2)
                if coeff:
                    acc = acc + specialize(hl_qprime(mu), z2).scale(coeff)
            assert acc == specialize(schur_in_p(lam), z2)

    def test_reduced_schur_in_reduced_dual_weight_four(self):
        """The five reduced expansions at modulus 2: every Schur function of
        weight 4 reduces to a combination of the two regular-indexed duals."""
        z2 = CyclotomicNumber.zeta(2)
        ps = partitions(4)
        inverse = inverse_kostka_matrix(4)
        rp = regular_partitions((2,), 4)
        assert rp == (P((4,)), P((3, 1)))
        expected = {
            P((4,)): {P((4,)): 1},
            P((3, 1)): {P((3, 1)): 1, P((4,)): 1},
            P((2, 2)): {P((3, 1)): 1},
            P((2, 1, 1)): {P((3, 1)): 1, P((4,)): 1},
            P((1, 1, 1, 1)): {P((4,)): 1},
        }
        for lam in ps:
            lhs = r_reduce(specialize(schur_in_p(lam), z2), 2)
            acc = SymFunc.zero(4)
            row = {}
            for mu in rp:
                coeff = inverse[ps.index(mu)][ps.index(lam)](z2)
                if coeff:
                    row[mu] = coeff.as_rational()
                    acc = acc + r_reduce(
                        specialize(hl_qprime(mu), z2), 2
                    ).scale(coeff)
            assert acc == lhs
            assert row == {k: Fraction(v) for k, v in expected[lam].items()}

    def test_transition_matrix_weight_four(self):
        matrix = transition_matrix("s", "qprime", 4, 2)
        assert matrix.rows == (P((4,)), P((3, 1)))
        assert matrix.cols == (P((4,)), P((3, 1)))
        values = [[e.as_rational() for e in row] for row in matrix.entries]
        assert values == [[1, 0], [1, 1]]


class TestTransitionMatrices:
    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_family_in_itself_is_identity(self, r, n):
        for family in ("s", "qprime", "p"):
            assert transition_matrix(family, family, n, r).is_identity()

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_inverse_pair(self, r, n):
        forward = transition_matrix("s", "p", n, r)
        backward = transition_matrix("p", "s", n, r)
        assert (forward @ backward).is_identity()

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            transition_matrix("schur", "p", 3, 2)

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_dual_to_power_determinant(self, r, n):
        det = transition_matrix("qprime", "p", n, r).determinant()
        rational = det.as_rational()
        assert rational is not None
        c = glaisher_exponent((r,), 0, n)
        a = part_product((r,), n)
        assert abs(rational) == Fraction(1, r ** c * a)


class TestBareissDeterminant:
    def test_integers(self):
        assert bareiss_determinant([[1, 2], [3, 4]]) == -2
        assert bareiss_determinant([[2]]) == 2
        assert bareiss_determinant([]) == 1

    def test_identity(self):
        assert bareiss_determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1

    def test_singular(self):
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_zero_pivot_with_swap(self):
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1

    def test_fractions(self):
        m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
        assert bareiss_determinant(m) == Fraction(1, 14) - Fraction(1, 15)

    def test_larger_integer_matrix(self):
        m = [
            [2, 0, 1, 3],
            [1, 1, 0, 2],
            [0, 5, 1, 1],
            [3, 2, 1, 0],
        ]
        # expansion checked against cofactor evaluation
        def cofactor_det(rows):
            if len(rows) == 1:
                return rows[0][0]
            total = 0
            for j in range(len(rows)):
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * rows[0][j] * cofactor_det(minor)
            return total

        assert bareiss_determinant(m) == cofactor_det(m)

    def test_polynomial_entries(self):
        t = PolyT.t()
        m = [[PolyT.one(), t], [t, t * t]]
        assert bareiss_determinant(m).is_zero
        m = [[1 - t, t], [t, 1 + t]]
        assert bareiss_determinant([[PolyT.coerce(e) for e in row] for row in m]) == \
            PolyT([1]) - 2 * (t * t)
