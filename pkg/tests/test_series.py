from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorcalc.series import (
    LaurentElement,
    LogSeries,
    NilpotentPoly,
    PowerSeries,
    lambert_expand,
    lambert_invert,
    lambert_synthesize,
)

F = Fraction


def series(coeffs, var="z"):
    return PowerSeries(coeffs, var)


rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
small_series = st.lists(rationals, min_size=4, max_size=7).map(series)


class TestArithmetic:
    def test_one_plus_z_times_one_minus_z(self):
        a = series([1, 1, 0])
        b = series([1, -1, 0])
        assert a * b == series([1, 0, -1])

    def test_geometric_series(self):
        one_minus_z = series([1, -1, 0, 0, 0, 0])
        assert 1 / one_minus_z == series([1, 1, 1, 1, 1, 1])

    def test_truncation_is_min_of_orders(self):
        a = series([1, 2, 3, 4])
        b = series([5, 6])
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_variable_mismatch_rejected(self):
        a = series([1, 2])
        b = series([1, 2], var="q")
        with pytest.raises(ValueError, match="variable mismatch"):
            a * b
        with pytest.raises(ValueError, match="variable mismatch"):
            a + b

    def test_division_by_zero_constant_term(self):
        with pytest.raises(ZeroDivisionError):
            series([1, 1]) / series([0, 1])

    @given(small_series, small_series, small_series)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)

    @given(small_series)
    @settings(max_examples=40, deadline=None)
    def test_multiplicative_inverse(self, a):
        if a.constant_term == 0:
            with pytest.raises(ZeroDivisionError):
                a.reciprocal()
        else:
            assert a * a.reciprocal() == PowerSeries.one(a.order)

    def test_period_series_reciprocal_roundtrip(self):
        from mirrorcalc.periods import holomorphic_period

        e0 = holomorphic_period(5, 10)
        assert e0 * (1 / e0) == PowerSeries.one(10)


class TestExpLog:
    def test_exp_zero(self):
        assert PowerSeries.zero(5).exp() == PowerSeries.one(5)

    def test_log_exp_identity(self):
        z = PowerSeries.identity(6)
        assert z.exp().log() == z

    def test_exp_770z(self):
        f = series([0, 770, 0]).exp()
        # 770^2/2 = 296450
        assert f == series([1, 770, 296450])

    def test_preconditions(self):
        with pytest.raises(ValueError):
            series([1, 1]).exp()
        with pytest.raises(ValueError):
            series([2, 1]).log()

    @given(st.lists(rationals, min_size=4, max_size=6))
    @settings(max_examples=40, deadline=None)
    def test_exp_log_roundtrips(self, tail):
        f = series([0] + tail)
        assert f.exp().log() == f
        g = series([1] + tail)
        assert g.log().exp() == g


class TestRevert:
    def test_revert_identity(self):
        z = PowerSeries.identity(5)
        assert z.revert(var="q") == PowerSeries.identity(5, var="q")

    def test_revert_z_plus_z2(self):
        f = series([0, 1, 1, 0, 0])
        g = f.revert(var="q")
        # Lagrange inversion of z + z^2: alternating signed Catalan numbers.
        assert g == series([0, 1, -1, 2, -5], var="q")

    def test_revert_brute_force_composition(self):
        f = series([0, 1, 3, F(-1, 2), 7, 2])
        g = f.revert()
        assert f.compose(g) == PowerSeries.identity(5)
        assert g.compose(f) == PowerSeries.identity(5)

    def test_revert_precondition(self):
        with pytest.raises(ValueError):
            series([1, 1]).revert()
        with pytest.raises(ValueError):
            series([0, 2]).revert()

    @given(st.lists(rationals, min_size=3, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_revert_two_sided(self, tail):
        f = series([0, 1] + tail)
        g = f.revert()
        ident = PowerSeries.identity(f.order)
        assert f.compose(g) == ident
        assert g.compose(f) == ident


class TestTheta:
    def test_monomial(self):
        f = PowerSeries.monomial(3, 4)
        assert f.theta() == PowerSeries.monomial(3, 4, coeff=3)

    def test_theta_log_z(self):
        logz = LogSeries([PowerSeries.zero(4), PowerSeries.one(4)])
        assert logz.theta() == PowerSeries.one(4)

    def test_theta_product_rule_on_logs(self):
        # theta((log z)^2 * z) = 2 (log z) z + (log z)^2 z
        zee = PowerSeries.identity(4)
        f = LogSeries([PowerSeries.zero(4), PowerSeries.zero(4), zee])
        expect = LogSeries([PowerSeries.zero(4), 2 * zee, zee])
        assert f.theta() == expect

    @given(small_series, small_series)
    @settings(max_examples=40, deadline=None)
    def test_theta_leibniz_and_additivity(self, a, b):
        assert (a * b).theta() == a.theta() * b + a * b.theta()
        assert (a + b).theta() == a.theta() + b.theta()


class TestLambert:
    def test_expand_basic(self):
        assert lambert_expand(1, 3) == series([0, 1, 1, 1], var="q")
        assert lambert_expand(2, 5) == series([0, 0, 1, 0, 1, 0], var="q")
        assert lambert_expand(4, 3).is_zero()
        with pytest.raises(ValueError):
            lambert_expand(0, 3)

    def test_quintic_low_degrees(self):
        # Plain q-expansion coefficients of the three-point function minus 5,
        # inverted with the cube-of-degree convention.
        c = series([0, 2875, 4876875, 8564575000], var="q")
        numbers, integral = lambert_invert(c, ell=3)
        assert numbers == [2875, 609250, 317206375]
        assert integral

    def test_pure_lambert_kernel(self):
        c = lambert_expand(1, 5)
        numbers, integral = lambert_invert(c, ell=0)
        assert numbers == [1, 0, 0, 0, 0]
        assert integral

    def test_non_integral_flag(self):
        c = series([0, F(1, 2)], var="q")
        numbers, integral = lambert_invert(c, ell=0)
        assert numbers == [F(1, 2)]
        assert not integral

    @given(
        st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=8),
        st.integers(min_value=0, max_value=3),
    )
    @settings(max_examples=60, deadline=None)
    def test_roundtrip(self, numbers, ell):
        c = lambert_synthesize(numbers, ell, order=len(numbers))
        recovered, integral = lambert_invert(c, ell)
        assert recovered == [F(x) for x in numbers]
        assert integral


class TestNilpotentPoly:
    def test_rho_power_truncates(self):
        rho = NilpotentPoly([0, 1, 0])
        assert rho * rho == NilpotentPoly([0, 0, 1])
        assert rho * rho * rho == NilpotentPoly([0, 0, 0])

    def test_inverse(self):
        x = NilpotentPoly([2, 3, -1, 5])
        assert x * x.inverse() == 1
        with pytest.raises(ZeroDivisionError):
            NilpotentPoly([0, 1]).inverse()


class TestLaurent:
    def test_no_zero_coefficients_stored(self):
        x = LaurentElement({-2: 1, 3: 0})
        assert x.terms == {-2: F(1)}

    def test_arithmetic(self):
        q = LaurentElement.monomial(1)
        qinv = LaurentElement.monomial(-1)
        assert q * qinv == 1
        assert (q - 1) * (qinv - 1) == 2 - q - qinv


class TestSerialization:
    def test_json_roundtrip(self):
        f = series([1, F(-7, 3), 0, F(2, 11)])
        g = PowerSeries.from_json(f.to_json())
        assert g == f

    def test_json_shape(self):
        import json

        f = series([F(1, 2), 3], var="q")
        data = json.loads(f.to_json())
        assert data == {
            "variable": "q",
            "truncation": 1,
            "coefficients": ["1/2", "3"],
        }
