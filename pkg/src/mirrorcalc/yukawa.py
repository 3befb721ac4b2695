r"""Mirror map, Yukawa couplings, and instanton numbers.

This is the second half of the B-model pipeline.  Starting from the
Frobenius basis e_0..e_n of the degree-N family (N = n + 2), it

1. forms the canonical coordinate t = e_1/e_0 = log z + s(z) and the mirror
   map q = z e^{s(z)}, inverted exactly to z(q);
2. row-reduces the period vector b_0 = (n+2) (1, e_1/e_0, ..., e_n/e_0)
   with the q-chart logarithmic derivative D = (theta t)^{-1} theta,
   normalizing each diagonal entry to n+2.  The multiplier y_j produced at
   step j is the three-point coupling Y^1_j once z is replaced by z(q);
   every y_j must be single-valued (the log terms cancel) and the entries
   0..j of each derived row must vanish -- those two assertions are the
   computational content of the distinguished-section reduction;
3. multiplies the couplings into the n-point function
   prod_j Y^1_j / (n+2)^{n-1};
4. strips the multiple-cover factors d^ell (ell = number of 1's among the
   three codimensions) by Lambert inversion, yielding integer curve counts
   n_d per degree.

All arithmetic is exact; non-integral curve counts abort with a diagnostic
instead of being rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mirrorcalc.periods import FrobeniusBasis, frobenius_basis, pf_operator
from mirrorcalc.series import (
    LogSeries,
    PowerSeries,
    lambert_invert,
    lambert_synthesize,
)

#: truncation budget covering every printed table entry
DEFAULT_ORDERS = {3: 12, 4: 8, 5: 6, 6: 6}


class ReductionError(RuntimeError):
    """A structural assertion of the distinguished reduction failed."""


class IntegralityError(RuntimeError):
    """An extracted curve count is not an integer."""


@dataclass(frozen=True)
class MirrorMap:
    q_of_z: PowerSeries  # tag z
    z_of_q: PowerSeries  # tag q

    def roundtrip_is_identity(self) -> bool:
        comp = self.q_of_z.retag("q").compose(self.z_of_q)
        return comp == PowerSeries.identity(comp.order, "q")


def mirror_map(basis: FrobeniusBasis) -> MirrorMap:
    """q(z) = z exp(s(z)) from t = e_1/e_0 = log z + s(z), plus its inverse."""
    e0 = basis[0].series_part
    if e0.constant_term != 1:
        raise ValueError("holomorphic period must start with 1")
    t = basis[1].divide_by_series(e0)
    s = t.series_part
    if s.constant_term != 0:
        raise ValueError("single-valued part of the canonical coordinate must vanish at z=0")
    order = s.order
    q_of_z = s.exp().shift(1).truncate(order)
    z_of_q = q_of_z.revert(var="q")
    return MirrorMap(q_of_z=q_of_z, z_of_q=z_of_q)


@dataclass(frozen=True)
class CouplingSet:
    """Three-point functions Y^1_j(q), j = 0..n-1, plus secondary couplings."""

    dimension: int
    couplings: tuple[PowerSeries, ...]  # tag q
    secondary: dict = field(default_factory=dict)  # (a, b) -> PowerSeries

    @property
    def degree(self) -> int:
        return self.dimension + 2

    def coupling(self, j: int) -> PowerSeries:
        return self.couplings[j]

    def validate(self) -> None:
        n, N = self.dimension, self.degree
        if len(self.couplings) != n:
            raise ReductionError("expected couplings Y^1_0 .. Y^1_{n-1}")
        if not self.couplings[0] == N:
            raise ReductionError("Y^1_0 must be the constant n+2")
        for j, y in enumerate(self.couplings):
            if y.constant_term != N:
                raise ReductionError(f"Y^1_{j} must have constant term {N}")
            mirror = self.couplings[n - 1 - j]
            t = min(y.order, mirror.order)
            if y.truncate(t) != mirror.truncate(t):
                raise ReductionError(f"symmetry Y^1_{j} = Y^1_{n-1-j} violated")


def distinguished_reduction(basis: FrobeniusBasis, mmap: MirrorMap) -> CouplingSet:
    """Row-reduce the period vector to constant diagonal n+2; read off Y^1_j."""
    n = basis.dimension
    N = basis.degree
    e0 = basis[0].series_part
    t = basis[1].divide_by_series(e0)
    theta_t = t.theta()
    if not theta_t.is_single_valued():
        raise ReductionError("theta t must be single-valued")
    inv_theta_t = theta_t.series_part.reciprocal()

    def dq(x: LogSeries) -> LogSeries:
        # q-chart logarithmic derivative computed in the z-chart
        return x.theta() * inv_theta_t

    row = [e.divide_by_series(e0) * Fraction(N) for e in basis.solutions]
    couplings_z = []
    for j in range(n):
        derived = [dq(entry) for entry in row]
        for i in range(j + 1):
            if not derived[i].is_zero():
                raise ReductionError(
                    f"entry {i} of the derived row {j} should vanish"
                )
        y = derived[j + 1]
        if not y.is_single_valued():
            raise ReductionError(f"log terms failed to cancel in y_{j}")
        y_series = y.series_part
        if y_series.constant_term == 0:
            raise ReductionError(f"y_{j} has no classical term")
        couplings_z.append(y_series)
        row = [entry.divide_by_series(y_series) * Fraction(N) for entry in derived]
    couplings_q = tuple(y.compose(mmap.z_of_q) for y in couplings_z)
    out = CouplingSet(dimension=n, couplings=couplings_q)
    out.validate()
    return out


def npoint_function(couplings: CouplingSet) -> PowerSeries:
    """prod_{j=0}^{n-1} Y^1_j / (n+2)^(n-1); matches the n-point table."""
    n, N = couplings.dimension, couplings.degree
    prod = PowerSeries.one(couplings.coupling(0).order, "q")
    for j in range(n):
        prod = prod * couplings.coupling(j)
    return prod / Fraction(N) ** (n - 1)


def secondary_coupling(couplings: CouplingSet) -> PowerSeries:
    """Y^2_2 = (Y^1_2)^2 / Y^1_1, the sheaf-cup-product associativity identity.

    Only meaningful in dimension six, where {2,2,n-4} = {2,2,2}.
    """
    if couplings.dimension != 6:
        raise ValueError(
            "Y^2_2 is defined by the quotient identity only for n = 6"
        )
    y11 = couplings.coupling(1)
    y12 = couplings.coupling(2)
    return y12 * y12 / y11


def degree_factor_exponent(a: int, b: int, n: int) -> int:
    """Number of codimension-one slots among {a, b, n-a-b}."""
    return sum(1 for x in (a, b, n - a - b) if x == 1)


@dataclass(frozen=True)
class InstantonFamily:
    ell: int
    numbers: tuple[Fraction, ...]  # n_1 .. n_T
    integral: bool


@dataclass(frozen=True)
class InstantonTable:
    dimension: int
    families: dict  # (a, b) -> InstantonFamily

    def numbers(self, a: int = 1, b: int = 1) -> tuple[Fraction, ...]:
        return self.families[(a, b)].numbers

    def all_integral(self) -> bool:
        return all(f.integral for f in self.families.values())


def extract_instantons(couplings: CouplingSet, strict: bool = True) -> InstantonTable:
    """Subtract n+2 and invert the multiple-cover sum for each coupling.

    With strict=True (the default) a non-integer count raises
    IntegralityError naming the offending family and degree.
    """
    n, N = couplings.dimension, couplings.degree
    families = {}

    def add(a, b, series):
        ell = degree_factor_exponent(a, b, n)
        numbers, integral = lambert_invert(series - N, ell)
        if strict and not integral:
            bad = next(
                (d, x) for d, x in enumerate(numbers, start=1) if x.denominator != 1
            )
            raise IntegralityError(
                f"Y^{a}_{b} (n={n}): n_{bad[0]} = {bad[1]} is not an integer"
            )
        families[(a, b)] = InstantonFamily(
            ell=ell, numbers=tuple(numbers), integral=integral
        )

    for j in range(1, (n - 1) // 2 + 1):
        add(1, j, couplings.coupling(j))
    for (a, b), series in couplings.secondary.items():
        add(a, b, series)
    return InstantonTable(dimension=n, families=families)


def reconstruct_coupling(table: InstantonTable, a: int, b: int,
                         order: int) -> PowerSeries:
    """Lambert synthesis of a family plus the classical constant n+2."""
    fam = table.families[(a, b)]
    return lambert_synthesize(fam.numbers, fam.ell, order) + (table.dimension + 2)


def yukawa_closed_form_check(order: int = 10) -> bool:
    """Independent closed-form oracle for the quintic top coupling.

    From L = sum p_k theta^k the pairing W = <Omega, theta^3 Omega>
    satisfies 2 theta W = -(p_3/p_4) W, solved by W = c / (1 - 5^5 z); the
    constant c = 5 is the classical cup number.  Transforming with the
    mirror map and the e_0-normalization must reproduce Y^1_1 exactly.
    A mismatch raises ReductionError.
    """
    L = pf_operator(5)
    p3 = L.coeff_polys[3]
    p4 = L.coeff_polys[4]
    zorder = order

    def poly(p):
        return PowerSeries(list(p) + [0] * (zorder + 1 - len(p)), "z")

    a3 = poly(p3) / poly(p4)
    w = 5 * poly((1, -(5**5))).reciprocal()
    # certify the first-order equation 2 theta W + a3 W = 0
    if not (2 * w.theta() + a3 * w).is_zero():
        raise ReductionError("closed form fails the derived first-order equation")
    if w.constant_term != 5:
        raise ReductionError("classical cup number must fix c = 5")
    basis = frobenius_basis(5, zorder)
    mmap = mirror_map(basis)
    e0 = basis[0].series_part
    theta_t = basis[1].divide_by_series(e0).theta().series_part
    y_z = w / (e0 * e0 * theta_t**3)
    y_q = y_z.compose(mmap.z_of_q)
    reduced = distinguished_reduction(basis, mmap).coupling(1)
    t = min(y_q.order, reduced.order, order)
    if y_q.truncate(t) != reduced.truncate(t):
        raise ReductionError("closed-form Yukawa disagrees with the reduction")
    return True


@dataclass(frozen=True)
class MirrorTables:
    """Everything the tables print for one dimension, plus the checks."""

    dimension: int
    order: int
    mmap: MirrorMap
    couplings: CouplingSet
    npoint: PowerSeries
    instantons: InstantonTable


def compute_tables(n: int, order: int | None = None) -> MirrorTables:
    """Run the full B-model pipeline for the degree-(n+2) family."""
    if not 3 <= n <= 6:
        raise ValueError("mirror tables are computed for 3 <= n <= 6")
    if order is None:
        order = DEFAULT_ORDERS[n]
    if order < 1:
        raise ValueError("truncation order must be at least 1")
    basis = frobenius_basis(n + 2, order)
    mmap = mirror_map(basis)
    if not mmap.roundtrip_is_identity():
        raise ReductionError("mirror map reversion roundtrip failed")
    couplings = distinguished_reduction(basis, mmap)
    if n == 6:
        couplings.secondary[(2, 2)] = secondary_coupling(couplings)
    npoint = npoint_function(couplings)
    instantons = extract_instantons(couplings)
    # Lambert roundtrip: synthesis must reproduce each coupling
    for (a, b) in instantons.families:
        source = (
            couplings.coupling(b) if a == 1 else couplings.secondary[(a, b)]
        )
        rebuilt = reconstruct_coupling(instantons, a, b, source.order)
        if rebuilt != source:
            raise ReductionError(f"Lambert roundtrip failed for Y^{a}_{b}")
    return MirrorTables(
        dimension=n,
        order=order,
        mmap=mmap,
        couplings=couplings,
        npoint=npoint,
        instantons=instantons,
    )
