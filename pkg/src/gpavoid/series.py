"""Truncated exponential generating functions with exact coefficients.

A series holds true power-series coefficients f_0..f_N, so a counting
sequence a_n enters as f_n = a_n/n! and the textbook dictionary applies
verbatim: disjoint union is +, labeled product is the Cauchy product,
forming sets is exp, the boxed product (smallest label in the first
factor) is integral of B'*C, and the double boxed product (smallest and
largest label both in the first factor) is the double integral of B''*C.

``EgfSeries`` keeps exact rationals and is the reference arithmetic up
to moderate orders (denominators reach N!).  ``FloatSeries`` mirrors the
same operations in floating point for figure-scale orders; every
pipeline here has nonnegative coefficients, so the float mirror does not
suffer cancellation.

Truncation discipline: a binary operation trusts its output to the
minimum of the input orders; integrate keeps the order (the new top
coefficient is determined), differentiate loses one.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, float]


class _SeriesBase:
    """Shared arithmetic; subclasses fix the coefficient type."""

    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Number]):
        convert = self._convert
        self.coeffs = tuple(convert(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    # -- subclass hooks -------------------------------------------------
    @staticmethod
    def _convert(c):
        raise NotImplementedError

    @staticmethod
    def _ratio(num, den):
        raise NotImplementedError

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int):
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int):
        return cls([1] + [0] * order)

    @classmethod
    def z(cls, order: int):
        if order < 1:
            raise ValueError("need order >= 1 for z")
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def exp_z(cls, order: int):
        return cls([cls._ratio(1, math.factorial(n)) for n in range(order + 1)])

    @classmethod
    def monomial(cls, coeff: Number, power: int, order: int):
        if power > order:
            raise ValueError(f"power {power} exceeds order {order}")
        c = [0] * (order + 1)
        c[power] = coeff
        return cls(c)

    @classmethod
    def from_counts(cls, counts: Sequence[Number], order: int | None = None):
        """Build from a counting sequence: f_n = a_n / n!."""
        if order is None:
            order = len(counts) - 1
        if order >= len(counts):
            raise ValueError("not enough counts for the requested order")
        return cls(
            [cls._ratio(counts[n], math.factorial(n)) for n in range(order + 1)]
        )

    # -- basics ----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int):
        return self.coeffs[n]

    def truncate(self, order: int):
        if order > self.order:
            raise ValueError(f"cannot extend a series from order {self.order} to {order}")
        return type(self)(self.coeffs[: order + 1])

    def to_counts(self) -> list:
        """Counting sequence a_n = f_n * n!."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def int_counts(self) -> list[int]:
        """Counts as integers; raises if any coefficient is not integral."""
        out = []
        for n, c in enumerate(self.to_counts()):
            i = int(c)
            if i != c:
                raise ValueError(f"count at n={n} is not an integer: {c}")
            out.append(i)
        return out

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order >= 5 else ""
        return f"{type(self).__name__}(order={self.order}, [{head}{tail}])"

    # -- ring operations --------------------------------------------------
    def _binary_order(self, other) -> int:
        if type(self) is not type(other):
            raise TypeError(
                f"cannot mix {type(self).__name__} and {type(other).__name__}"
            )
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._binary_order(other)
        return type(self)([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other):
        n = self._binary_order(other)
        return type(self)([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def scale(self, q: Number):
        q = self._convert(q)
        return type(self)([q * c for c in self.coeffs])

    def __mul__(self, other):
        n = self._binary_order(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum(a[i] * b[k - i] for i in range(k + 1)))
        return type(self)(out)


class EgfSeries(_SeriesBase):
    """Exact rational coefficients."""

    @staticmethod
    def _convert(c):
        if isinstance(c, float):
            raise TypeError("EgfSeries is exact; got a float coefficient")
        return Fraction(c)

    @staticmethod
    def _ratio(num, den):
        return Fraction(num, den)

    def to_float(self) -> "FloatSeries":
        return FloatSeries([float(c) for c in self.coeffs])


class FloatSeries(_SeriesBase):
    """Floating-point mirror for orders beyond the exact-mode cap."""

    @staticmethod
    def _convert(c):
        if isinstance(c, Fraction):
            return float(c)
        return float(c)

    @staticmethod
    def _ratio(num, den):
        # Fraction division survives magnitudes far beyond float range
        return float(Fraction(num) / Fraction(den))


SeriesLike = Union[EgfSeries, FloatSeries]


def integrate(a: SeriesLike) -> SeriesLike:
    """Antiderivative with zero constant term, same trusted order."""
    out = [a._convert(0)]
    for n in range(1, a.order + 1):
        out.append(a._ratio(1, n) * a.coeffs[n - 1])
    return type(a)(out)


def differentiate(a: SeriesLike) -> SeriesLike:
    """Derivative; the trusted order drops by one."""
    if a.order == 0:
        raise ValueError("cannot differentiate an order-0 series")
    return type(a)([(n + 1) * a.coeffs[n + 1] for n in range(a.order)])


def exp_series(a: SeriesLike) -> SeriesLike:
    """exp(A) for a series with zero constant term.

    Uses the recurrence E' = A'E, i.e. n*e_n = sum_{j>=1} j*a_j*e_{n-j};
    a nonzero constant term would force an irrational factor and is
    rejected.
    """
    if a.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant term")
    n_max = a.order
    e = [a._convert(1)]
    for n in range(1, n_max + 1):
        acc = sum(j * a.coeffs[j] * e[n - j] for j in range(1, n + 1))
        e.append(a._ratio(1, n) * acc)
    return type(a)(e)


def reciprocal(a: SeriesLike) -> SeriesLike:
    """1/A for a series with nonzero constant term."""
    if a.coeffs[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    inv0 = a._ratio(1, 1) / a.coeffs[0]
    r = [inv0]
    for n in range(1, a.order + 1):
        acc = sum(a.coeffs[j] * r[n - j] for j in range(1, n + 1))
        r.append(-inv0 * acc)
    return type(a)(r)


def compose(f: SeriesLike, g: SeriesLike) -> SeriesLike:
    """F(G(z)) for G with zero constant term, by Horner over series.

    With g_0 = 0 the z^n coefficient of G^k vanishes for k > n, so the
    truncated evaluation is exact to the trusted order.
    """
    if g.coeffs[0] != 0:
        raise ValueError("compose needs a zero constant term inside")
    n = min(f.order, g.order)
    cls = type(f)
    if type(g) is not cls:
        raise TypeError("compose needs two series of the same kind")
    gt = g.truncate(n)
    acc = cls.zero(n)
    for i in range(f.order, -1, -1):
        acc = acc * gt + cls.monomial(f.coeffs[i], 0, n)
    return acc


def boxed(b: SeriesLike, c: SeriesLike) -> SeriesLike:
    """Labeled product with the smallest label in the first factor."""
    return integrate(differentiate(b) * c)


def double_boxed(b: SeriesLike, c: SeriesLike) -> SeriesLike:
    """Smallest and largest label both in the first factor."""
    if b.order < 2:
        raise ValueError("double boxed product needs order >= 2")
    return integrate(integrate(differentiate(differentiate(b)) * c))


def _log_value(x) -> float:
    """log of a positive int/Fraction/float of any magnitude."""
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    if isinstance(x, int):
        return math.log(x)
    return math.log(x)


def nth_root_ratios(source) -> list[float]:
    """Entries (a_n/n!)^(1/n); index n, with a 1.0 placeholder at n=0.

    ``source`` may be a CountSequence, a plain list of counts, or a
    series (whose coefficients already are a_n/n!).  Computed in the log
    domain so factorially large counts do not overflow.
    """
    if isinstance(source, _SeriesBase):
        logs = []
        for c in source.coeffs:
            logs.append(_log_value(c) if c > 0 else None)
    else:
        counts = getattr(source, "counts", source)
        logs = []
        for n, a in enumerate(counts):
            if a <= 0:
                logs.append(None)
            else:
                logs.append(_log_value(a) - math.lgamma(n + 1))
    out = [1.0]
    for n in range(1, len(logs)):
        out.append(math.exp(logs[n] / n) if logs[n] is not None else float("nan"))
    return out


def series_to_json(a: EgfSeries) -> str:
    """Serialize as {order, coeff_numerators, coeff_denominators}."""
    doc = {
        "order": a.order,
        "coeff_numerators": [str(c.numerator) for c in a.coeffs],
        "coeff_denominators": [str(c.denominator) for c in a.coeffs],
    }
    return json.dumps(doc, sort_keys=True)


def series_from_json(text: str) -> EgfSeries:
    doc = json.loads(text)
    nums = [int(s) for s in doc["coeff_numerators"]]
    dens = [int(s) for s in doc["coeff_denominators"]]
    if len(nums) != doc["order"] + 1 or len(dens) != len(nums):
        raise ValueError("inconsistent series document")
    return EgfSeries([Fraction(n, d) for n, d in zip(nums, dens)])
