from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorcalc.periods import (
    FrobeniusBasis,
    ThetaOperator,
    formal_monodromy,
    frobenius_basis,
    holomorphic_period,
    indicial_exponents,
    pf_operator,
)
from mirrorcalc.series import LogSeries, PowerSeries

F = Fraction


def multinomial_oracle(N, m):
    """(Nm)! / (m!)^N: the constant-term count of the residue integrand."""
    return factorial(N * m) // factorial(m) ** N


class TestHolomorphicPeriod:
    def test_quintic_leading_coefficients(self):
        e0 = holomorphic_period(5, 4)
        assert e0.coeffs[:3] == (F(1), F(120), F(113400))

    @given(st.integers(min_value=3, max_value=8), st.integers(min_value=0, max_value=6))
    @settings(max_examples=40, deadline=None)
    def test_against_factorial_oracle(self, N, m):
        e0 = holomorphic_period(N, m)
        assert e0.coefficient(m) == multinomial_oracle(N, m)

    def test_cubic_first_coefficient(self):
        assert holomorphic_period(3, 1).coefficient(1) == 6

    def test_constant_term_always_one(self):
        for N in range(3, 9):
            assert holomorphic_period(N, 2).constant_term == 1

    def test_degenerate_degrees_rejected(self):
        for N in (0, 1, 2):
            with pytest.raises(ValueError):
                holomorphic_period(N, 3)
            with pytest.raises(ValueError):
                pf_operator(N)


class TestPicardFuchsOperator:
    def test_order(self):
        assert pf_operator(5).order == 4
        assert pf_operator(6).order == 5

    def test_annihilates_quintic_period_to_z20(self):
        L = pf_operator(5)
        assert L.annihilates(holomorphic_period(5, 20))

    def test_quintic_recurrence_oracle(self):
        # m^4 a_m = 5 (5m-4)(5m-3)(5m-2)(5m-1) a_{m-1}
        e0 = holomorphic_period(5, 12)
        for m in range(1, 13):
            lhs = Fraction(m) ** 4 * e0.coefficient(m)
            rhs = (
                5
                * (5 * m - 4)
                * (5 * m - 3)
                * (5 * m - 2)
                * (5 * m - 1)
                * e0.coefficient(m - 1)
            )
            assert lhs == rhs

    def test_sextic_recurrence_and_annihilation(self):
        e0 = holomorphic_period(6, 15)
        for m in range(1, 16):
            rhs = e0.coefficient(m - 1) * 6
            for k in range(1, 6):
                rhs *= 6 * (m - 1) + k
            assert Fraction(m) ** 5 * e0.coefficient(m) == rhs
        assert pf_operator(6).annihilates(e0)

    def test_leading_coefficient_vanishes_at_conifold(self):
        for N in (5, 6, 7):
            lead = pf_operator(N).coeff_polys[-1]
            z0 = F(1, N**N)
            assert lead[0] + lead[1] * z0 == 0

    def test_serialization_roundtrip(self):
        L = pf_operator(5)
        assert ThetaOperator.from_json(L.to_json()) == L


class TestFrobeniusBasis:
    def test_e0_is_holomorphic_period(self):
        fb = frobenius_basis(5, 8)
        assert fb[0] == holomorphic_period(5, 8)

    def test_quintic_e1_single_valued_coefficient(self):
        # h_1 = a_1 * 5*(1/2+1/3+1/4+1/5) = 120 * 77/12 = 770
        fb = frobenius_basis(5, 3)
        assert fb[1].series_part.coefficient(1) == 770

    def test_log_degree_structure(self):
        for N in (5, 6):
            fb = frobenius_basis(N, 5)
            for j, e in enumerate(fb):
                assert e.max_log_degree == j

    def test_divided_power_structure(self):
        fb = frobenius_basis(5, 6)
        e0 = fb[0]
        for j, e in enumerate(fb):
            assert e.log_coefficient(j) == e0 * F(1, factorial(j))

    @pytest.mark.parametrize("N,T", [(5, 12), (6, 9), (7, 6), (8, 6)])
    def test_all_solutions_annihilated(self, N, T):
        L = pf_operator(N)
        fb = frobenius_basis(N, T)
        assert len(fb.solutions) == N - 1
        for e in fb:
            assert L.annihilates(e)

    def test_wronskian_triangularity(self):
        # constant term of theta^j (e_j / e_0) equals 1
        fb = frobenius_basis(5, 6)
        e0 = fb[0]
        for j, e in enumerate(fb):
            f = e.divide_by_series(e0)
            for _ in range(j):
                f = f.theta()
            assert f.is_single_valued() or f.log_coefficient(0).constant_term == 1
            assert f.series_part.constant_term == 1


class TestIndicialExponents:
    def test_quintic_at_origin(self):
        data = indicial_exponents(pf_operator(5), 0)
        assert data.exponents == (0, 0, 0, 0)

    def test_quintic_at_conifold(self):
        data = indicial_exponents(pf_operator(5), F(1, 3125))
        assert data.exponents == (0, 1, 1, 2)

    def test_quintic_at_infinity(self):
        data = indicial_exponents(pf_operator(5), "infinity")
        assert data.exponents == (F(1, 5), F(2, 5), F(3, 5), F(4, 5))

    @pytest.mark.parametrize(
        "N,conifold",
        [
            (6, (0, 1, F(3, 2), 2, 3)),
            (7, (0, 1, 2, 2, 3, 4)),
            (8, (0, 1, 2, F(5, 2), 3, 4, 5)),
        ],
    )
    def test_higher_degree_conifold_regressions(self, N, conifold):
        data = indicial_exponents(pf_operator(N), F(1, N**N))
        assert data.exponents == conifold

    @pytest.mark.parametrize("N", [5, 6, 7, 8])
    def test_fuchs_relation(self, N):
        # three regular singular points: exponent sums add to r(r-1)/2
        L = pf_operator(N)
        total = sum(indicial_exponents(L, 0).exponents)
        total += sum(indicial_exponents(L, F(1, N**N)).exponents)
        total += sum(indicial_exponents(L, "infinity").exponents)
        r = L.order
        assert total == F(r * (r - 1), 2)

    def test_ordinary_point_has_staircase_exponents(self):
        data = indicial_exponents(pf_operator(5), F(1, 7))
        assert data.exponents == (0, 1, 2, 3)

    def test_irregular_point_rejected(self):
        # theta^2 + z^{-like} growth: q_1 order drops too far at z = 1
        op = ThetaOperator([(F(0),), (F(1),), (F(1), F(-2), F(1))])
        with pytest.raises(ValueError, match="irregular"):
            indicial_exponents(op, 1)


class TestFormalMonodromy:
    def test_quintic_nilpotency_index(self):
        report = formal_monodromy(frobenius_basis(5, 5))
        assert report.nilpotency_index == 4

    def test_sextic_nilpotency_index(self):
        report = formal_monodromy(frobenius_basis(6, 5))
        assert report.nilpotency_index == 5

    def test_e0_fixed(self):
        report = formal_monodromy(frobenius_basis(5, 5))
        column0 = [row[0] for row in report.matrix]
        assert column0 == [1, 0, 0, 0]

    def test_unit_shift_matrix_is_divided_powers(self):
        report = formal_monodromy(frobenius_basis(5, 5))
        for i in range(4):
            for j in range(4):
                expect = F(1, factorial(j - i)) if j >= i else F(0)
                assert report.matrix[i][j] == expect

    def test_weight_ranks_even_and_one_dimensional(self):
        report = formal_monodromy(frobenius_basis(6, 4))
        assert report.weight_ranks == (1, 1, 1, 1, 1)
