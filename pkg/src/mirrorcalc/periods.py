r"""Periods of the mirror family of degree-N hypersurfaces, N = n + 2.

The one-parameter mirror family (the quotiented Dwork pencil) is studied in
the coordinate z = (N psi)^{-N}-normalized so that

* z = 0 is the large complex structure limit (maximally unipotent),
* z = N^{-N} is the conifold,
* z = infinity is the finite-monodromy (Fermat) point.

The holomorphic period is e_0(z) = sum_m (Nm)!/(m!)^N z^m, annihilated by
the hypergeometric operator

    L = theta^{N-1} - N z (N theta + 1)(N theta + 2) ... (N theta + N-1),

with theta = z d/dz.  The full local basis at z = 0 is produced by the
Frobenius method: deform e_0 with z^rho, compute the coefficient recurrence
in Q[rho]/(rho^{N-1}), and read off logarithmic solutions

    e_j = [rho^j] ( z^rho sum_m c_m(rho) z^m ),    j = 0 .. n,

so that the (log z)^j coefficient of e_j is e_0 / j! (divided powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from mirrorcalc.series import LogSeries, NilpotentPoly, PowerSeries

INFINITY = "infinity"


def _poly_eval(poly: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _poly_trim(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class ThetaOperator:
    """sum_k p_k(z) theta^k with polynomial coefficients p_k, theta = z d/dz.

    Coefficients act on the left (normal form), so applying the operator to a
    series means: differentiate, then multiply by the polynomial.
    """

    def __init__(self, coeff_polys):
        polys = [_poly_trim(p) for p in coeff_polys]
        while len(polys) > 1 and polys[-1] == (Fraction(0),):
            polys.pop()
        if polys[-1] == (Fraction(0),):
            raise ValueError("leading coefficient is identically zero")
        self.coeff_polys = tuple(polys)

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    def __repr__(self):
        return f"ThetaOperator(order={self.order})"

    def __eq__(self, other):
        if isinstance(other, ThetaOperator):
            return self.coeff_polys == other.coeff_polys
        return NotImplemented

    def apply(self, f):
        """Apply to a PowerSeries or LogSeries (exact through f's order)."""
        result = None
        current = f
        for k, poly in enumerate(self.coeff_polys):
            if k > 0:
                current = current.theta()
            term = _poly_times(poly, current)
            result = term if result is None else result + term
        return result

    def annihilates(self, f) -> bool:
        return self.apply(f).is_zero()

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "order": self.order,
                "coefficients": [[str(c) for c in p] for p in self.coeff_polys],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ThetaOperator":
        import json

        data = json.loads(text)
        polys = [[Fraction(c) for c in p] for p in data["coefficients"]]
        op = cls(polys)
        if op.order != data["order"]:
            raise ValueError("order field inconsistent with coefficients")
        return op


def _poly_times(poly: tuple[Fraction, ...], f):
    """(p_0 + p_1 z + ...) * f for a PowerSeries or LogSeries f."""
    if isinstance(f, PowerSeries):
        out = PowerSeries.zero(f.order, f.var)
        for j, c in enumerate(poly):
            if c != 0:
                out = out + f.shift(j).truncate(f.order) * c
        return out
    if isinstance(f, LogSeries):
        parts = [_poly_times(poly, p) for p in f.parts]
        return LogSeries(parts)
    raise TypeError(type(f).__name__)


def holomorphic_period(N: int, order: int) -> PowerSeries:
    """e_0(z) = sum_m (Nm)!/(m!)^N z^m through z^order.

    Computed by the multiplicative recurrence
    a_m = a_{m-1} N (N(m-1)+1)...(N(m-1)+N-1) / m^{N-1}.
    """
    _check_degree(N)
    coeffs = [Fraction(1)]
    a = Fraction(1)
    for m in range(1, order + 1):
        num = N
        for k in range(1, N):
            num *= N * (m - 1) + k
        a = a * Fraction(num, m ** (N - 1))
        coeffs.append(a)
    return PowerSeries(coeffs, "z")


def pf_operator(N: int) -> ThetaOperator:
    """The Picard-Fuchs operator theta^{N-1} - N z prod_{k=1}^{N-1}(N theta + k)."""
    _check_degree(N)
    # prod (N theta + k) as a constant-coefficient polynomial in theta
    prod = [Fraction(1)]
    for k in range(1, N):
        nxt = [Fraction(0)] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i] += c * k
            nxt[i + 1] += c * N
        prod = nxt
    polys = []
    for k in range(N):
        if k < N - 1:
            polys.append((Fraction(0), -N * prod[k]))  # -N * s_k * z
        else:
            polys.append((Fraction(1), -N * prod[k]))  # 1 - N^N z
    return ThetaOperator(polys)


def _check_degree(N: int):
    if N < 3:
        raise ValueError(
            f"no Calabi-Yau hypersurface of degree {N}: need N >= 3"
        )


@dataclass(frozen=True)
class FrobeniusBasis:
    """Local solution basis e_0..e_n at the maximally unipotent point z = 0."""

    degree: int  # N = n + 2
    solutions: tuple[LogSeries, ...]

    @property
    def dimension(self) -> int:
        return self.degree - 2

    @property
    def order(self) -> int:
        return self.solutions[0].order

    def __iter__(self):
        return iter(self.solutions)

    def __getitem__(self, j):
        return self.solutions[j]


def frobenius_basis(N: int, order: int) -> FrobeniusBasis:
    """Solutions e_j, j = 0..n, via the rho-deformed recurrence mod rho^{N-1}."""
    _check_degree(N)
    m_nil = N - 1
    c = NilpotentPoly.scalar(1, m_nil)
    # rho-coefficient tables: table[k][m] = [rho^k] c_m(rho)
    table = [[c.coefficient(k)] for k in range(m_nil)]
    for m in range(1, order + 1):
        num = NilpotentPoly.scalar(N, m_nil)
        for k in range(1, N):
            num = num * NilpotentPoly.linear(N * (m - 1) + k, N, m_nil)
        den = NilpotentPoly.linear(m, 1, m_nil)
        inv = den.inverse()
        for _ in range(N - 2):
            inv = inv * den.inverse()
        c = c * num * inv
        for k in range(m_nil):
            table[k].append(c.coefficient(k))
    # e_j = sum_{i <= j} (log z)^i / i! * C^{(j-i)}(z)
    component = [PowerSeries(table[k], "z") for k in range(m_nil)]
    solutions = []
    for j in range(N - 1):
        parts = [
            component[j - i] * Fraction(1, factorial(i)) for i in range(j + 1)
        ]
        solutions.append(LogSeries(parts))
    return FrobeniusBasis(degree=N, solutions=tuple(solutions))


# ---------------------------------------------------------------------------
# Indicial analysis


@dataclass(frozen=True)
class IndicialData:
    location: object  # Fraction or the string "infinity"
    exponents: tuple[Fraction, ...]  # sorted, with multiplicity


def indicial_exponents(op: ThetaOperator, location) -> IndicialData:
    """Exponent multiset of the indicial polynomial at a regular singular point.

    location is 0, a nonzero rational, or the string "infinity".
    """
    if location == INFINITY:
        poly = _indicial_at_infinity(op)
    else:
        loc = Fraction(location)
        if loc == 0:
            poly = _indicial_at_origin(op)
        else:
            poly = _indicial_at_finite(op, loc)
    roots = _rational_roots(poly, expected=op.order)
    return IndicialData(location=location, exponents=tuple(sorted(roots)))


def _indicial_at_origin(op: ThetaOperator) -> tuple[Fraction, ...]:
    return _poly_trim([p[0] for p in op.coeff_polys])


def _indicial_at_infinity(op: ThetaOperator) -> tuple[Fraction, ...]:
    # z = 1/w sends theta_z to -theta_w; z^j becomes w^{-j}.  Clearing the
    # common pole leaves polynomial coefficients r_k(w); the indicial
    # polynomial reads off their lowest common w-order.
    maxdeg = max(len(p) - 1 for p in op.coeff_polys)
    r = []
    for k, p in enumerate(op.coeff_polys):
        cs = [Fraction(0)] * (maxdeg + 1)
        sign = Fraction(-1) ** k
        for j, cj in enumerate(p):
            cs[maxdeg - j] += sign * cj
        r.append(cs)
    shift = min(
        next(i for i, c in enumerate(cs) if c != 0)
        for cs in r
        if any(c != 0 for c in cs)
    )
    return _poly_trim([cs[shift] for cs in r])


def _indicial_at_finite(op: ThetaOperator, z0: Fraction) -> tuple[Fraction, ...]:
    # Convert to d/dz form via theta^k = sum_i S(k,i) z^i D^i, recentre at
    # u = z - z0, and collect the lowest u-order of q_i(u) u^{-i}.
    order = op.order
    stirling = _stirling2(order)
    q = [dict() for _ in range(order + 1)]  # q_i as {z-degree: coeff}
    for k, p in enumerate(op.coeff_polys):
        for i in range(k + 1):
            s = stirling[k][i]
            if s == 0:
                continue
            for j, cj in enumerate(p):
                if cj != 0:
                    q[i][j + i] = q[i].get(j + i, Fraction(0)) + cj * s
    # shift each q_i to the u-chart
    q_u = []
    for i in range(order + 1):
        maxd = max(q[i], default=0)
        cs = [Fraction(0)] * (maxd + 1)
        for d, cd in q[i].items():
            # z^d = (z0 + u)^d
            term = Fraction(1)
            for m in range(d + 1):
                cs[m] += cd * _binom(d, m) * z0 ** (d - m)
        q_u.append(_poly_trim(cs))
    orders = []
    for i, cs in enumerate(q_u):
        v = next((m for m, c in enumerate(cs) if c != 0), None)
        orders.append(v)
    if orders[order] is None:
        raise ValueError("leading coefficient vanishes identically")
    mu = min(v - i for i, v in enumerate(orders) if v is not None)
    if mu < orders[order] - order:
        raise ValueError(f"irregular singular point at z = {z0}")
    # I(rho) = sum_i [u^{i+mu}] q_i * rho (rho-1) ... (rho-i+1)
    poly = [Fraction(0)]
    for i, cs in enumerate(q_u):
        m = i + mu
        if m < 0 or m >= len(cs) or cs[m] == 0:
            continue
        falling = [Fraction(1)]  # rho(rho-1)...(rho-i+1) as coefficients
        for s in range(i):
            nxt = [Fraction(0)] * (len(falling) + 1)
            for d, c in enumerate(falling):
                nxt[d] += -s * c
                nxt[d + 1] += c
            falling = nxt
        if len(falling) > len(poly):
            poly += [Fraction(0)] * (len(falling) - len(poly))
        for d, c in enumerate(falling):
            poly[d] += cs[m] * c
    return _poly_trim(poly)


def _stirling2(n: int):
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            table[k][i] = table[k - 1][i - 1] + i * table[k - 1][i]
    return table


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _rational_roots(poly: tuple[Fraction, ...], expected: int) -> list[Fraction]:
    """All roots of poly with multiplicity, demanding they be rational.

    The degree must equal `expected` (one exponent per solution).
    """
    if len(poly) - 1 != expected:
        raise ValueError(
            f"indicial polynomial has degree {len(poly) - 1}, expected {expected}"
        )
    # clear denominators to a primitive integer polynomial
    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    roots: list[Fraction] = []
    while len(ints) > 1:
        root = _find_rational_root(ints)
        if root is None:
            raise ValueError("indicial polynomial has an irrational root")
        roots.append(root)
        ints = _deflate(ints, root)
    return roots


def _find_rational_root(ints: list[int]) -> Fraction | None:
    # trailing zeros mean root 0
    if ints[0] == 0:
        return Fraction(0)
    lead = ints[-1]
    tail = ints[0]
    for p in _divisors(abs(tail)):
        for q in _divisors(abs(lead)):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if _int_poly_eval(ints, cand) == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _int_poly_eval(ints: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _deflate(ints: list[int], root: Fraction) -> list[int]:
    # synthetic division by (x - root); the quotient is rescaled to integers
    n = len(ints) - 1
    b = [Fraction(0)] * n
    b[n - 1] = Fraction(ints[n])
    for i in range(n - 1, 0, -1):
        b[i - 1] = ints[i] + root * b[i]
    den = 1
    for c in b:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in b]


# ---------------------------------------------------------------------------
# Formal monodromy at z = 0


@dataclass(frozen=True)
class MonodromyReport:
    matrix: tuple[tuple[Fraction, ...], ...]  # unit shift log z -> log z + 1
    nilpotency_index: int  # smallest k with (M - I)^k = 0
    weight_ranks: tuple[int, ...]  # graded ranks at weights 0, 2, ..., 2n


def formal_monodromy(basis: FrobeniusBasis) -> MonodromyReport:
    """Action of the unit shift log z -> log z + 1 on the Frobenius basis.

    The shifted solutions are re-expressed in the basis by peeling off log
    degrees (the (log z)^j coefficient of e_j is e_0/j!); the change-of-basis
    matrix M is unipotent with (M-I)^n != 0 and (M-I)^{n+1} = 0.
    """
    sols = list(basis.solutions)
    size = len(sols)
    e0 = sols[0].series_part
    columns = []
    for j, e in enumerate(sols):
        shifted = e.shift_log(1)
        coeffs = [Fraction(0)] * size
        rem = shifted
        for d in range(rem.max_log_degree, -1, -1):
            g = rem.log_coefficient(d)
            ratio = g * Fraction(factorial(d)) / e0
            alpha = ratio.constant_term
            if not (ratio - PowerSeries.constant(alpha, ratio.order, ratio.var)).is_zero():
                raise ValueError("shifted solution leaves the span of the basis")
            coeffs[d] = alpha
            rem = rem - sols[d] * alpha
        if not rem.is_zero():
            raise ValueError("monodromy peel-off left a nonzero remainder")
        columns.append(coeffs)
    matrix = tuple(
        tuple(columns[j][i] for j in range(size)) for i in range(size)
    )
    nilp = _nilpotent_part(matrix)
    index = _nilpotency_index(nilp)
    ranks = _weight_ranks(nilp)
    return MonodromyReport(matrix=matrix, nilpotency_index=index, weight_ranks=ranks)


def _nilpotent_part(matrix):
    size = len(matrix)
    return [
        [matrix[i][j] - (1 if i == j else 0) for j in range(size)]
        for i in range(size)
    ]


def _mat_mul(a, b):
    size = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _mat_is_zero(a) -> bool:
    return all(all(c == 0 for c in row) for row in a)


def _nilpotency_index(nilp) -> int:
    power = nilp
    k = 1
    while not _mat_is_zero(power):
        power = _mat_mul(power, nilp)
        k += 1
    return k


def _mat_rank(a) -> int:
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        rank += 1
    return rank


def _weight_ranks(nilp) -> tuple[int, ...]:
    """Graded ranks of the weight filtration of a single-grading nilpotent.

    For these one-parameter families the monodromy logarithm is a single
    Jordan block; the weight filtration has one-dimensional graded pieces in
    each even weight 0, 2, ..., 2n.  Verified from the ranks of the powers.
    """
    size = len(nilp)
    ranks = []
    power = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    for k in range(size + 1):
        ranks.append(_mat_rank(power))
        power = _mat_mul(power, nilp)
    # single Jordan block <=> rank N^k = size - k
    if any(ranks[k] != max(size - k, 0) for k in range(size + 1)):
        raise ValueError("monodromy logarithm is not a single Jordan block")
    return tuple(1 for _ in range(size))
