r"""Truncated formal power series and friends, over exact rationals.

Everything here is exact: coefficients are `fractions.Fraction`, no floats
ever appear.  A :class:`PowerSeries` knows its truncation order T --
coefficients of exponents > T are *unknown*, not zero -- and every binary
operation returns the min of the operand orders, so precision loss is always
explicit.  Series carry a variable tag (``z`` for the complex-structure
chart, ``q`` for the canonical coordinate, ``w`` for the chart at infinity)
and refuse arithmetic across tags; the only sanctioned crossing is
:meth:`PowerSeries.compose`.

The module also provides

* :class:`LogSeries` -- polynomials in log z with PowerSeries coefficients
  (plain powers (log z)^i, not divided powers), the habitat of the
  multi-valued period solutions;
* :class:`NilpotentPoly` -- the ring Q[rho]/(rho^m) used by the Frobenius
  deformation method;
* :class:`LaurentElement` -- sparse one-variable Laurent polynomials, used
  for the symbolic flop identity;
* Lambert-series synthesis and inversion, the multiple-cover bookkeeping
  that turns coupling series into curve counts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int]

VARIABLE_TAGS = ("z", "q", "w")


def _frac(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class PowerSeries:
    """A truncated power series sum_{k=0}^{T} a_k x^k with exact coefficients.

    ``order`` is the truncation order T; the stored coefficient list always
    has length T+1.  Instances are immutable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Rational], var: str = "z"):
        if var not in VARIABLE_TAGS:
            raise ValueError(f"unknown variable tag {var!r}")
        cs = tuple(_frac(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = cs
        self.var = var

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: Rational, order: int, var: str = "z") -> "PowerSeries":
        return cls((_frac(value),) + (Fraction(0),) * order, var)

    @classmethod
    def zero(cls, order: int, var: str = "z") -> "PowerSeries":
        return cls.constant(0, order, var)

    @classmethod
    def one(cls, order: int, var: str = "z") -> "PowerSeries":
        return cls.constant(1, order, var)

    @classmethod
    def identity(cls, order: int, var: str = "z") -> "PowerSeries":
        """The series x itself."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1), var)

    @classmethod
    def monomial(cls, k: int, order: int, var: str = "z", coeff: Rational = 1) -> "PowerSeries":
        if not 0 <= k <= order:
            raise ValueError("monomial exponent outside truncation range")
        cs = [Fraction(0)] * (order + 1)
        cs[k] = _frac(coeff)
        return cls(cs, var)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*{self.var}^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O({self.var}^{self.order + 1})>"

    # -- arithmetic --------------------------------------------------------

    def _common(self, other: "PowerSeries") -> int:
        if self.var != other.var:
            raise ValueError(
                f"variable mismatch: {self.var!r} vs {other.var!r}"
            )
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += _frac(other)
            return PowerSeries(cs, self.var)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = self._common(other)
        return PowerSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(t + 1)], self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return PowerSeries([c * f for c in self.coeffs], self.var)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = self._common(other)
        out = [Fraction(0)] * (t + 1)
        for i, a in enumerate(self.coeffs[: t + 1]):
            if a == 0:
                continue
            for j in range(t + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(out, self.var)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k] != 0:
                    acc += self.coeffs[k] * out[m - k]
            out[m] = -inv0 * acc
        return PowerSeries(out, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            if f == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / f)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = self._common(other)
        return self.truncate(t) * other.truncate(t).reciprocal()

    def __rtruediv__(self, other):
        return PowerSeries.constant(_frac(other), self.order, self.var) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = PowerSeries.one(self.order, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- reshaping ---------------------------------------------------------

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series (coefficients unknown)")
        return PowerSeries(self.coeffs[: order + 1], self.var)

    def shift(self, j: int) -> "PowerSeries":
        """Multiply by x^j; the result is known through order T+j."""
        if j < 0:
            raise ValueError("negative shifts leave the power series ring")
        return PowerSeries((Fraction(0),) * j + self.coeffs, self.var)

    def retag(self, var: str) -> "PowerSeries":
        """Explicit chart relabeling; the one sanctioned way to change tags."""
        return PowerSeries(self.coeffs, var)

    # -- calculus ----------------------------------------------------------

    def theta(self) -> "PowerSeries":
        """The logarithmic derivative x d/dx."""
        return PowerSeries(
            [k * c for k, c in enumerate(self.coeffs)], self.var
        )

    def exp(self) -> "PowerSeries":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        out = [Fraction(1)] + [Fraction(0)] * self.order
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self.coeffs[k] != 0:
                    acc += k * self.coeffs[k] * out[m - k]
            out[m] = acc / m
        return PowerSeries(out, self.var)

    def log(self) -> "PowerSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        out = [Fraction(0)] * (self.order + 1)
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, m):
                if self.coeffs[m - k] != 0:
                    acc += k * out[k] * self.coeffs[m - k]
            out[m] = self.coeffs[m] - acc / m
        return PowerSeries(out, self.var)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner), requiring inner(0) = 0.  Result lives in inner's chart."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        t = min(self.order, inner.order)
        inner_t = inner.truncate(t)
        result = PowerSeries.constant(self.coeffs[t], t, inner.var)
        for k in range(t - 1, -1, -1):
            result = result * inner_t + self.coeffs[k]
        return result

    def revert(self, var: str | None = None) -> "PowerSeries":
        """Compositional inverse of a series with f(0)=0, f'(0)=1.

        Lagrange inversion: the m-th coefficient of the inverse is
        (1/m) [x^{m-1}] (x/f)^m.
        """
        if self.coeffs[0] != 0 or self.order < 1 or self.coeffs[1] != 1:
            raise ValueError("reversion needs f(0) = 0 and f'(0) = 1")
        t = self.order
        # x/f as a series with constant term 1.
        h = PowerSeries(self.coeffs[1:], self.var).reciprocal()  # order t-1
        out = [Fraction(0), Fraction(1)] + [Fraction(0)] * (t - 1)
        power = h  # h^m, truncated as we go
        for m in range(2, t + 1):
            power = power * h
            out[m] = power.coeffs[m - 1] / m
        return PowerSeries(out, var or self.var)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "variable": self.var,
                "truncation": self.order,
                "coefficients": [str(c) for c in self.coeffs],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "PowerSeries":
        data = json.loads(text)
        coeffs = [Fraction(c) for c in data["coefficients"]]
        if len(coeffs) != data["truncation"] + 1:
            raise ValueError("coefficient list inconsistent with truncation order")
        return cls(coeffs, data["variable"])


class LogSeries:
    """sum_i g_i(z) (log z)^i with PowerSeries coefficients g_i.

    Plain powers of log z are stored (factorials appear explicitly in the
    callers that want divided powers).  The top coefficient is nonzero
    unless the whole series is zero.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[PowerSeries]):
        parts = list(parts)
        if not parts:
            raise ValueError("need at least the log-degree-0 part")
        var = parts[0].var
        order = min(p.order for p in parts)
        if any(p.var != var for p in parts):
            raise ValueError("variable mismatch among log coefficients")
        parts = [p.truncate(order) for p in parts]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        self.parts = tuple(parts)

    @property
    def var(self) -> str:
        return self.parts[0].var

    @property
    def order(self) -> int:
        return self.parts[0].order

    @property
    def max_log_degree(self) -> int:
        return len(self.parts) - 1

    def log_coefficient(self, i: int) -> PowerSeries:
        if i > self.max_log_degree:
            return PowerSeries.zero(self.order, self.var)
        return self.parts[i]

    @property
    def series_part(self) -> PowerSeries:
        """The single-valued (log-free) part."""
        return self.parts[0]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def is_single_valued(self) -> bool:
        return self.max_log_degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, LogSeries):
            return self.parts == other.parts
        if isinstance(other, PowerSeries):
            return self.max_log_degree == 0 and self.parts[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        chunks = [f"({p!r})*(log {self.var})^{i}" for i, p in enumerate(self.parts)]
        return " + ".join(chunks)

    @classmethod
    def from_series(cls, s: PowerSeries) -> "LogSeries":
        return cls([s])

    def _coerce(self, other) -> "LogSeries":
        if isinstance(other, LogSeries):
            return other
        if isinstance(other, PowerSeries):
            return LogSeries([other])
        if isinstance(other, (int, Fraction)):
            return LogSeries([PowerSeries.constant(other, self.order, self.var)])
        raise TypeError(f"cannot combine LogSeries with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        n = max(self.max_log_degree, o.max_log_degree)
        order = min(self.order, o.order)
        parts = []
        for i in range(n + 1):
            a = self.log_coefficient(i).truncate(order)
            b = o.log_coefficient(i).truncate(order)
            parts.append(a + b)
        return LogSeries(parts)

    __radd__ = __add__

    def __neg__(self):
        return LogSeries([-p for p in self.parts])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogSeries([p * other for p in self.parts])
        if isinstance(other, PowerSeries):
            return LogSeries([p * other for p in self.parts])
        if isinstance(other, LogSeries):
            n = self.max_log_degree + other.max_log_degree
            order = min(self.order, other.order)
            parts = [PowerSeries.zero(order, self.var) for _ in range(n + 1)]
            for i, p in enumerate(self.parts):
                for j, q in enumerate(other.parts):
                    parts[i + j] = parts[i + j] + p * q
            return LogSeries(parts)
        return NotImplemented

    __rmul__ = __mul__

    def divide_by_series(self, s) -> "LogSeries":
        if isinstance(s, LogSeries):
            if not s.is_single_valued():
                raise ValueError("can only divide by a single-valued series")
            s = s.series_part
        inv = s.reciprocal()
        return LogSeries([p * inv for p in self.parts])

    def theta(self) -> "LogSeries":
        """theta = z d/dz, with theta(log z) = 1 via the product rule."""
        n = self.max_log_degree
        parts = []
        for i in range(n + 1):
            p = self.log_coefficient(i).theta()
            if i + 1 <= n:
                p = p + (i + 1) * self.log_coefficient(i + 1)
            parts.append(p)
        return LogSeries(parts)

    def shift_log(self, c: Rational) -> "LogSeries":
        """Substitute log z -> log z + c (the formal unit of monodromy)."""
        c = _frac(c)
        n = self.max_log_degree
        parts = [PowerSeries.zero(self.order, self.var) for _ in range(n + 1)]
        for i, p in enumerate(self.parts):
            # (log z + c)^i = sum_m C(i, m) c^(i-m) (log z)^m
            cpow = [Fraction(1)]
            for _ in range(i):
                cpow.append(cpow[-1] * c)
            for m in range(i + 1):
                coef = Fraction(_binomial(i, m)) * cpow[i - m]
                parts[m] = parts[m] + p * coef
        return LogSeries(parts)


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def theta(f):
    """Logarithmic derivative of a PowerSeries or LogSeries."""
    return f.theta()


class NilpotentPoly:
    """Elements of Q[rho]/(rho^m): the Frobenius deformation ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational]):
        if not coeffs:
            raise ValueError("modulus order must be positive")
        self.coeffs = tuple(_frac(c) for c in coeffs)

    @property
    def modulus(self) -> int:
        return len(self.coeffs)

    @classmethod
    def scalar(cls, value: Rational, modulus: int) -> "NilpotentPoly":
        return cls((_frac(value),) + (Fraction(0),) * (modulus - 1))

    @classmethod
    def linear(cls, a: Rational, b: Rational, modulus: int) -> "NilpotentPoly":
        """a + b*rho."""
        if modulus == 1:
            return cls.scalar(a, 1)
        return cls((_frac(a), _frac(b)) + (Fraction(0),) * (modulus - 2))

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j]

    def _check(self, other: "NilpotentPoly"):
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def __eq__(self, other):
        if isinstance(other, NilpotentPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"NilpotentPoly({list(self.coeffs)})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += _frac(other)
            return NilpotentPoly(cs)
        self._check(other)
        return NilpotentPoly([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NilpotentPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-_frac(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return NilpotentPoly([c * f for c in self.coeffs])
        self._check(other)
        m = self.modulus
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(m - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return NilpotentPoly(out)

    __rmul__ = __mul__

    def inverse(self) -> "NilpotentPoly":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("not a unit in Q[rho]/(rho^m)")
        inv0 = Fraction(1) / self.coeffs[0]
        m = self.modulus
        out = [inv0] + [Fraction(0)] * (m - 1)
        for k in range(1, m):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i] != 0:
                    acc += self.coeffs[i] * out[k - i]
            out[k] = -inv0 * acc
        return NilpotentPoly(out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            if f == 0:
                raise ZeroDivisionError
            return self * (Fraction(1) / f)
        return self * other.inverse()


class LaurentElement:
    """Sparse Laurent polynomial sum c_k q^k, k in Z, over Q.

    Zero coefficients are never stored.  These are the group-ring elements
    in one variable; the flop computation needs the negative exponents.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = _frac(c)
                if c != 0:
                    clean[int(k)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, k: int, coeff: Rational = 1) -> "LaurentElement":
        return cls({k: coeff})

    def __eq__(self, other):
        if isinstance(other, LaurentElement):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            if f == 0:
                return not self.terms
            return self.terms == {0: f}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentElement(0)"
        body = " + ".join(f"{c}*q^{k}" for k, c in sorted(self.terms.items()))
        return f"LaurentElement({body})"

    def _coerce(self, other) -> "LaurentElement":
        if isinstance(other, LaurentElement):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentElement({0: other})
        raise TypeError

    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for k, c in o.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return LaurentElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        terms: dict[int, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, Fraction(0)) + c1 * c2
        return LaurentElement(terms)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms


def lambert_expand(d: int, order: int, var: str = "q") -> PowerSeries:
    """q^d/(1-q^d) = q^d + q^{2d} + ... truncated at the given order."""
    if d <= 0:
        raise ValueError("degree must be positive")
    cs = [Fraction(0)] * (order + 1)
    for m in range(d, order + 1, d):
        cs[m] = Fraction(1)
    return PowerSeries(cs, var)


def lambert_invert(c: PowerSeries, ell: int) -> tuple[list[Fraction], bool]:
    """Solve c(q) = sum_d n_d d^ell q^d/(1-q^d) for the n_d.

    Expanding the Lambert series gives c_m = sum_{d | m} n_d d^ell, so the
    n_d follow from the divisor-sum recurrence.  Returns (n_1..n_T, flag)
    where the flag reports whether every n_d is an integer; non-integrality
    is reported, never rounded away.
    """
    if c.constant_term != 0:
        raise ValueError("coupling series must have zero constant term")
    top = c.order
    n: list[Fraction] = [Fraction(0)] * (top + 1)
    for m in range(1, top + 1):
        acc = c.coefficient(m)
        for d in range(1, m):
            if m % d == 0 and n[d] != 0:
                acc -= n[d] * Fraction(d) ** ell
        n[m] = acc / Fraction(m) ** ell
    numbers = n[1:]
    integral = all(x.denominator == 1 for x in numbers)
    return numbers, integral


def lambert_synthesize(numbers: Sequence[Rational], ell: int, order: int,
                       var: str = "q") -> PowerSeries:
    """sum_d n_d d^ell q^d/(1-q^d), the inverse of :func:`lambert_invert`."""
    out = PowerSeries.zero(order, var)
    for d, nd in enumerate(numbers, start=1):
        if d > order:
            break
        nd = _frac(nd)
        if nd != 0:
            out = out + lambert_expand(d, order, var) * (nd * Fraction(d) ** ell)
    return out
