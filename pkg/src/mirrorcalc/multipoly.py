"""Small exact multivariate polynomials (internal helper).

Just enough ring arithmetic over Q in a fixed number of variables to drive
the splitting-principle Chern computations and the Fermat line census:
sparse exponent-tuple maps, symmetric reduction to the elementary basis,
and root-of-unity exponent folding.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    """Sparse polynomial: {exponent tuple -> nonzero Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(int(x) for x in e)] = c
        self.terms = clean

    @classmethod
    def constant(cls, value, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{p}" for i, p in enumerate(e) if p)
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return "MultiPoly(" + " + ".join(bits) + ")"

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return MultiPoly(self.nvars, {e: c * f for e, c in self.terms.items()})
        o = self._coerce(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, values) -> Fraction:
        out = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, p in zip(values, e):
                term *= Fraction(v) ** p
            out += term
        return out

    def fold_root_of_unity(self, var: int, order: int) -> "MultiPoly":
        """Impose x_var^order = 1 by reducing that exponent modulo order."""
        terms: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[var] %= order
            e2 = tuple(e2)
            terms[e2] = terms.get(e2, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)


def elementary_symmetric(j: int, nvars: int) -> MultiPoly:
    """e_j(x_0..x_{nvars-1})."""
    from itertools import combinations

    if j == 0:
        return MultiPoly.constant(1, nvars)
    terms = {}
    for subset in combinations(range(nvars), j):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return MultiPoly(nvars, terms)


def symmetric_reduce(poly: MultiPoly) -> dict[tuple, Fraction]:
    """Write a symmetric polynomial in the elementary basis.

    Returns {(p_1..p_r): coeff} meaning sum coeff * e_1^{p_1} ... e_r^{p_r}.
    Uses the classical lex-leading-term elimination; raises if the input is
    not symmetric (the algorithm then fails to terminate cleanly).
    """
    r = poly.nvars
    elem = [elementary_symmetric(j, r) for j in range(r + 1)]
    out: dict[tuple, Fraction] = {}
    rem = poly
    guard = 0
    while not rem.is_zero():
        guard += 1
        if guard > 100000:
            raise ValueError("symmetric reduction did not terminate")
        lead = max(rem.terms)
        coeff = rem.terms[lead]
        if list(lead) != sorted(lead, reverse=True):
            raise ValueError("input polynomial is not symmetric")
        powers = tuple(
            lead[i] - (lead[i + 1] if i + 1 < r else 0) for i in range(r)
        )
        prod = MultiPoly.constant(1, r)
        for i, p in enumerate(powers):
            if p:
                prod = prod * elem[i + 1] ** p
        rem = rem - prod * coeff
        out[powers] = out.get(powers, Fraction(0)) + coeff
    return {p: c for p, c in out.items() if c != 0}
