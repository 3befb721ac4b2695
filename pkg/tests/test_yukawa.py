from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorcalc.periods import frobenius_basis
from mirrorcalc.series import PowerSeries, lambert_synthesize
from mirrorcalc.yukawa import (
    CouplingSet,
    IntegralityError,
    MirrorTables,
    ReductionError,
    compute_tables,
    degree_factor_exponent,
    distinguished_reduction,
    extract_instantons,
    mirror_map,
    npoint_function,
    reconstruct_coupling,
    secondary_coupling,
    yukawa_closed_form_check,
)

F = Fraction

QUINTIC_COUNTS = [
    2875,
    609250,
    317206375,
    242467530000,
    229305888887625,
    248249742118022000,
    295091050570845659250,
    375632160937476603550000,
    503840510416985243645106250,
    704288164978454686113488249750,
]

NPOINT_N3 = [
    5,
    2875,
    4876875,
    8564575000,
    15517926796875,
    28663236110956000,
    53621944306062201000,
    101216230345800061125625,
    192323666400003538944396875,
    367299732093982242625847031250,
    704288164978454714776724365580000,
]

NPOINT_N4 = [
    6,
    120960,
    4136832000,
    148146924602880,
    5420219848911544320,
    200623934537137119778560,
    7478994517395643259712737280,
]

NPOINT_N5 = [7, 3727381, 2637885990187, 1927092954108108787, 1425153551321014327663291]

NPOINT_N6 = [
    8,
    106975232,
    1672023727001600,
    26611692333081695092736,
    426129121674687823674948571136,
]

SEXTIC_Y11 = [60480, 440884080, 6255156277440, 117715791990353760]
HEPTIC_Y11 = [1009792, 122239786088, 30528671745480104, 10378199509395886153216]
HEPTIC_Y12 = [1707797, 510787745643, 222548537108926490, 113635631482486991647224]
OCTIC_Y11 = [15984640, 33397159706624, 154090254047541417984, 1000674891265872131899670528]
OCTIC_Y12 = [37502976, 224340704157696, 2000750410187341381632, 21122119007324663457380794368]
OCTIC_Y22 = [59021312, 821654025830400, 12197109744970010814464, 186083410628492378226388631552]


@pytest.fixture(scope="module")
def quintic():
    return compute_tables(3, 10)


@pytest.fixture(scope="module")
def all_tables():
    return {n: compute_tables(n) for n in (3, 4, 5, 6)}


class TestMirrorMap:
    def test_quintic_first_coefficients(self, quintic):
        q_of_z = quintic.mmap.q_of_z
        assert q_of_z.coeffs[:3] == (0, 1, 770)
        z_of_q = quintic.mmap.z_of_q
        assert z_of_q.coeffs[:3] == (0, 1, -770)

    def test_roundtrip(self, quintic):
        assert quintic.mmap.roundtrip_is_identity()

    def test_leading_coefficient_is_one(self):
        for n in (3, 4, 5, 6):
            mm = mirror_map(frobenius_basis(n + 2, 4))
            assert mm.q_of_z.coefficient(1) == 1

    def test_rejects_unnormalized_period(self):
        basis = frobenius_basis(5, 4)
        doubled = type(basis)(
            degree=basis.degree,
            solutions=tuple(e * 2 for e in basis.solutions),
        )
        with pytest.raises(ValueError, match="start with 1"):
            mirror_map(doubled)


class TestDistinguishedReduction:
    def test_quintic_coupling(self, quintic):
        y11 = quintic.couplings.coupling(1)
        expect = lambert_synthesize(QUINTIC_COUNTS, 3, 10) + 5
        assert y11 == expect

    def test_sextic_coupling(self):
        tables = compute_tables(4, 5)
        y11 = tables.couplings.coupling(1)
        expect = lambert_synthesize(SEXTIC_Y11 + [2591176156368821985600], 2, 5) + 6
        assert y11 == expect

    def test_y10_constant(self, all_tables):
        for n, tables in all_tables.items():
            assert tables.couplings.coupling(0) == n + 2

    def test_symmetry(self, all_tables):
        for n, tables in all_tables.items():
            cs = tables.couplings
            for j in range(n):
                assert cs.coupling(j) == cs.coupling(n - 1 - j)

    def test_constant_terms(self, all_tables):
        for n, tables in all_tables.items():
            for j in range(n):
                assert tables.couplings.coupling(j).constant_term == n + 2

    def test_validation_rejects_broken_symmetry(self):
        good = compute_tables(3, 4).couplings
        bad = CouplingSet(
            dimension=3,
            couplings=(
                good.coupling(0),
                good.coupling(1),
                good.coupling(1) + PowerSeries.monomial(1, 4, "q"),
            ),
        )
        with pytest.raises(ReductionError, match="symmetry"):
            bad.validate()


class TestNPointFunction:
    @pytest.mark.parametrize(
        "n,expect",
        [(3, NPOINT_N3), (4, NPOINT_N4), (5, NPOINT_N5), (6, NPOINT_N6)],
    )
    def test_tables(self, all_tables, n, expect):
        np_series = npoint_function(all_tables[n].couplings)
        for k, val in enumerate(expect):
            if k <= np_series.order:
                assert np_series.coefficient(k) == val

    def test_n3_npoint_equals_y11(self, quintic):
        # Y^1_0 = Y^1_2 = 5 forces the three-point relation to degenerate
        np_series = npoint_function(quintic.couplings)
        assert np_series == quintic.couplings.coupling(1)

    def test_coefficientwise_consistency(self):
        # 2875 + 8 * 609250 = 4876875
        assert 2875 + 8 * 609250 == 4876875


class TestSecondaryCoupling:
    def test_n6_value(self, all_tables):
        y22 = secondary_coupling(all_tables[6].couplings).truncate(4)
        expect = lambert_synthesize(OCTIC_Y22, 0, 4) + 8
        assert y22 == expect

    def test_constant_term(self, all_tables):
        assert secondary_coupling(all_tables[6].couplings).constant_term == 8

    def test_undefined_for_n3(self, quintic):
        with pytest.raises(ValueError):
            secondary_coupling(quintic.couplings)


class TestInstantonExtraction:
    def test_quintic_numbers(self, quintic):
        assert list(quintic.instantons.numbers(1, 1)) == QUINTIC_COUNTS

    def test_heptic_families(self, all_tables):
        inst = all_tables[5].instantons
        assert list(inst.numbers(1, 1))[:4] == HEPTIC_Y11
        assert list(inst.numbers(1, 2))[:4] == HEPTIC_Y12
        assert inst.families[(1, 2)].ell == 1

    def test_octic_families(self, all_tables):
        inst = all_tables[6].instantons
        assert list(inst.numbers(1, 1))[:4] == OCTIC_Y11
        assert list(inst.numbers(1, 2))[:4] == OCTIC_Y12
        assert list(inst.numbers(2, 2))[:4] == OCTIC_Y22

    def test_degree_factor_exponents(self):
        assert degree_factor_exponent(1, 1, 3) == 3
        assert degree_factor_exponent(1, 1, 4) == 2
        assert degree_factor_exponent(1, 2, 5) == 1
        assert degree_factor_exponent(2, 2, 6) == 0

    def test_all_integral(self, all_tables):
        for tables in all_tables.values():
            assert tables.instantons.all_integral()

    def test_non_integrality_halts(self):
        couplings = CouplingSet(
            dimension=3,
            couplings=(
                PowerSeries.constant(5, 3, "q"),
                PowerSeries([5, F(1, 2), 0, 0], "q"),
                PowerSeries.constant(5, 3, "q"),
            ),
        )
        with pytest.raises(IntegralityError, match="not an integer"):
            extract_instantons(couplings)

    def test_lambert_roundtrip(self, all_tables):
        for n, tables in all_tables.items():
            for (a, b) in tables.instantons.families:
                source = (
                    tables.couplings.coupling(b)
                    if a == 1
                    else tables.couplings.secondary[(a, b)]
                )
                assert reconstruct_coupling(tables.instantons, a, b, source.order) == source

    @given(
        st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=6)
    )
    @settings(max_examples=30, deadline=None)
    def test_synthetic_roundtrip(self, numbers):
        order = len(numbers)
        series = lambert_synthesize(numbers, 3, order) + 5
        couplings = CouplingSet(
            dimension=3,
            couplings=(
                PowerSeries.constant(5, order, "q"),
                series,
                series,
            ),
        )
        inst = extract_instantons(couplings)
        assert list(inst.numbers(1, 1)) == [F(x) for x in numbers]


class TestClosedFormOracle:
    def test_agreement_to_order_10(self):
        assert yukawa_closed_form_check(10)

    def test_constant_is_classical_cup_number(self, quintic):
        assert quintic.couplings.coupling(1).constant_term == 5


class TestComputeTables:
    def test_defaults(self):
        assert compute_tables(3).order == 12
        assert compute_tables(5).order == 6

    def test_invalid_dimension(self):
        for n in (1, 2, 7):
            with pytest.raises(ValueError):
                compute_tables(n)

    def test_result_is_frozen_dataclass(self, quintic):
        assert isinstance(quintic, MirrorTables)
        with pytest.raises(AttributeError):
            quintic.order = 3
