"""Named generating functions and the coefficient sandwiches.

Everything here is a truncated exact series built from the series and
exponential-polynomial layers, and everything is cross-checkable against
brute-force counts:

* Bell EGF exp(e^z - 1) and the exponential Catalan series;
* the two consecutive length-3 avoider EGFs (132 via the reciprocal of
  1 - int e^{-t^2/2}, 123 via the reciprocal of the ODE solution of
  u'' + u' + u = 0 with u(0)=1, u'(0)=-1);
* the prepend-a-small-letter construction exp(int A) that turns the
  avoider EGF of a dashless pattern into the one for the same pattern
  with a lone smaller letter dashed in front;
* coefficient sandwiches: e^S < A < e^{S + e^z + z - 1} for ``12-34``
  (S from the block recurrences), the 1-23-4 sandwich between
  (1/2) int (e^{2e^y-2} - 1) dy and Cexp(e^z - 1), and the generic
  sandwich for a dashless core with a smaller letter in front and a
  largest letter behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counting import CountSequence, count_consecutive_dp, count_sequence
from .exppoly import s_series, s_series_float
from .patterns import GeneralizedPattern, parse_pattern
from .series import (
    EgfSeries,
    FloatSeries,
    compose,
    exp_series,
    integrate,
    reciprocal,
)

EXACT_ORDER_CAP = 60  # denominators reach order!, keep exact mode at desk scale


def bell_egf(order: int) -> EgfSeries:
    """EGF of the Bell numbers, exp(e^z - 1)."""
    e = EgfSeries.exp_z(order)
    return exp_series(e - EgfSeries.one(order))


def catalan_counts(n_max: int) -> list[int]:
    """C_0..C_{n_max} by the convolution recurrence."""
    c = [1]
    for n in range(n_max):
        c.append(sum(c[i] * c[n - i] for i in range(n + 1)))
    return c


def catalan_egf(order: int) -> EgfSeries:
    """Exponential Catalan series sum C_n z^n/n!."""
    return EgfSeries.from_counts(catalan_counts(order))


def a132_egf(order: int) -> EgfSeries:
    """Avoider EGF for the dashless pattern 132: 1/(1 - int e^{-t^2/2})."""
    half_sq = EgfSeries.monomial(Fraction(-1, 2), 2, order)
    gauss = exp_series(half_sq)
    return reciprocal(EgfSeries.one(order) - integrate(gauss))


def a123_egf(order: int) -> EgfSeries:
    """Avoider EGF for the dashless pattern 123.

    The reciprocal series U = 1/A solves u'' + u' + u = 0 with
    u(0) = 1, u'(0) = -1, giving the count recurrence
    u_{n+2} = -u_{n+1} - u_n (the pattern 1, -1, 0 repeating).  The
    exact rational route avoids the irrational pieces of the familiar
    cosine closed form; the test suite pins it against brute force and
    against numeric evaluation of that closed form.
    """
    u = [1, -1]
    for _ in range(order):
        u.append(-u[-1] - u[-2])
    return reciprocal(EgfSeries.from_counts(u[: order + 1]))


def a_consecutive_egf(pat: GeneralizedPattern, order: int) -> EgfSeries:
    """Avoider EGF of a dashless pattern, coefficients from the transfer DP."""
    seq = count_consecutive_dp(pat, order)
    return EgfSeries.from_counts(seq.counts)


def a_one_dash_sigma(a_sigma: EgfSeries) -> EgfSeries:
    """exp(int A): avoiders of the pattern with a small letter dashed in front.

    A permutation avoids the prefixed pattern exactly when each block
    between consecutive left-to-right minima avoids the dashless core,
    which is a set of min-marked blocks, hence the exp of an integral.
    """
    if a_sigma.coeffs[0] != 1:
        raise ValueError("avoider series must have constant term 1")
    return exp_series(integrate(a_sigma))


@dataclass
class BoundsReport:
    """A coefficient sandwich next to brute-force counts.

    ``verdicts[n]`` is "strict" when lower < alpha_n < upper, "equal"
    when one side ties (expected only at the smallest n), "violated"
    otherwise; verdicts exist only up to the brute-force cap.
    """

    pattern: GeneralizedPattern
    order: int
    lower: EgfSeries
    upper: EgfSeries
    bruteforce: CountSequence
    verdicts: list[str]

    def all_strict(self, n_from: int = 0, n_to: int | None = None) -> bool:
        n_to = len(self.verdicts) - 1 if n_to is None else n_to
        return all(v == "strict" for v in self.verdicts[n_from : n_to + 1])


def _verdicts(lower: EgfSeries, upper: EgfSeries, bf: CountSequence) -> list[str]:
    lo = lower.to_counts()
    hi = upper.to_counts()
    out = []
    for n in range(min(bf.n_max, lower.order) + 1):
        a = bf[n]
        if lo[n] < a < hi[n]:
            out.append("strict")
        elif lo[n] <= a <= hi[n]:
            out.append("equal")
        else:
            out.append("violated")
    return out


def bounds_12_34(order: int, bf_cap: int, *, force: bool = False,
                 threads: int = 1) -> BoundsReport:
    """Sandwich e^S < A < e^{S + e^z + z - 1} for the pattern ``12-34``."""
    s = s_series(order)
    lower = exp_series(s)
    bump = EgfSeries.exp_z(order) + EgfSeries.z(order) - EgfSeries.one(order)
    upper = exp_series(s + bump)
    pat = parse_pattern("12-34")
    bf = count_sequence(pat, bf_cap, force=force, threads=threads)
    return BoundsReport(pat, order, lower, upper, bf, _verdicts(lower, upper, bf))


def bounds_12_34_float(order: int) -> tuple[FloatSeries, FloatSeries]:
    """Float-mode sandwich series for figure-scale orders."""
    s = s_series_float(order)
    lower = exp_series(s)
    bump = FloatSeries.exp_z(order) + FloatSeries.z(order) - FloatSeries.one(order)
    upper = exp_series(s + bump)
    return lower, upper


def _lower_1_23_4(order: int) -> EgfSeries:
    # (1/2) int (e^{2e^y-2} - 1) dy, and the equivalent display
    # (1/2) int e^{2e^y-2} dy - z/2; both are built and compared
    e = EgfSeries.exp_z(order)
    grown = exp_series((e - EgfSeries.one(order)).scale(2))
    form_a = integrate(grown - EgfSeries.one(order)).scale(Fraction(1, 2))
    form_b = integrate(grown).scale(Fraction(1, 2)) - EgfSeries.z(order).scale(
        Fraction(1, 2)
    )
    if form_a != form_b:
        raise AssertionError("the two lower-bound forms disagree")
    return form_a


def bounds_1_23_4(order: int, bf_cap: int, *, force: bool = False,
                  threads: int = 1) -> BoundsReport:
    """Sandwich (1/2) int (e^{2e^y-2} - 1) dy < A < Cexp(e^z - 1)."""
    lower = _lower_1_23_4(order)
    upper = compose(catalan_egf(order), EgfSeries.exp_z(order) - EgfSeries.one(order))
    pat = parse_pattern("1-23-4")
    bf = count_sequence(pat, bf_cap, force=force, threads=threads)
    return BoundsReport(pat, order, lower, upper, bf, _verdicts(lower, upper, bf))


def bounds_1_23_4_float(order: int) -> tuple[FloatSeries, FloatSeries]:
    """Float-mode sandwich series for figure-scale orders."""
    e = FloatSeries.exp_z(order)
    one = FloatSeries.one(order)
    grown = exp_series((e - one).scale(2.0))
    lower = integrate(grown - one).scale(0.5)
    cat = FloatSeries.from_counts(catalan_counts(order))
    upper = compose(cat, e - one)
    return lower, upper


def bounds_1_sigma_k(a_sigma: EgfSeries, order: int | None = None
                     ) -> tuple[EgfSeries, EgfSeries]:
    """Generic sandwich for a dashless core flanked by a smaller letter
    in front and a largest letter behind (both dashed off):

        II e^{2 int A + y}  <  A_{1-core-k}  <  Cexp(int A)

    With A = e^z this reproduces the ``1-23-4`` bounds.
    """
    if a_sigma.coeffs[0] != 1:
        raise ValueError("avoider series must have constant term 1")
    if order is not None:
        a_sigma = a_sigma.truncate(order)
    n = a_sigma.order
    inner = integrate(a_sigma)
    lower = integrate(integrate(exp_series(inner.scale(2) + EgfSeries.z(n))))
    upper = compose(catalan_egf(n), inner)
    return lower, upper
