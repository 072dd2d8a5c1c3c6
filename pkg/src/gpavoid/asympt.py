"""Reference constants and growth-rate estimation.

For a dashless pattern the proportion of avoiders decays geometrically:
(alpha_n/n!)^(1/n) converges, because alpha_{m+n} <= alpha_m alpha_n
C(m+n, n) makes alpha_n/n! submultiplicative and Fekete's lemma applies.
This module estimates that limit from exact counts and computes the two
length-3 reference constants:

    rho_123 = 3*sqrt(3)/(2*pi)           = 0.8269933...
    1/rho_132 = the positive root of int_0^x e^{-t^2/2} dt = 1,
    giving rho_132 = 0.7839769... and the amplitude e^{x^2/2} = 2.2558142...

The amplitude printed alongside rho_123 is shipped as a plain reference
number (1.8305194): the usual closed-form expression for it is
inconsistent with its own decimal value, so only the decimal and an
empirical estimator are offered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .counting import CountSequence
from .series import nth_root_ratios

GAMMA_123_REFERENCE = 1.8305194
RHO_123_REFERENCE = 0.8269933
RHO_132_REFERENCE = 0.7839769
GAMMA_132_REFERENCE = 2.2558142

METHOD_NTH_ROOT = "nth_root"
METHOD_CONSECUTIVE_RATIO = "consecutive_ratio"

_GAUSS_INTEGRAL_ORDER = 40  # series tail at x=1.5 is far below 1e-15


def rho1() -> float:
    """Decay rate of the 123-avoider fraction: 3*sqrt(3)/(2*pi)."""
    return 3.0 * math.sqrt(3.0) / (2.0 * math.pi)


def gamma1_reference() -> float:
    """Reference amplitude for 123 avoiders (decimal only, see module doc)."""
    return GAMMA_123_REFERENCE


def _gauss_integral_terms() -> list[tuple[int, float]]:
    # int_0^x e^{-t^2/2} dt = sum_k (-1)^k x^(2k+1) / (2^k k! (2k+1))
    terms = []
    for k in range(_GAUSS_INTEGRAL_ORDER // 2 + 1):
        coeff = Fraction((-1) ** k, 2**k * factorial(k) * (2 * k + 1))
        terms.append((2 * k + 1, float(coeff)))
    return terms


def _gauss_integral(x: float) -> float:
    acc = 0.0
    for power, coeff in reversed(_gauss_integral_terms()):
        acc += coeff * x**power
    return acc


def _assert_tail_small(x: float) -> None:
    k = _GAUSS_INTEGRAL_ORDER // 2 + 1
    tail = x ** (2 * k + 1) / (2**k * factorial(k) * (2 * k + 1))
    if tail > 1e-15:
        raise AssertionError("truncated integrand is not accurate enough")


def rho2(tolerance: float = 1e-9) -> float:
    """Decay rate of the 132-avoider fraction.

    Solves F(x) = int_0^x e^{-t^2/2} dt - 1 = 0 by Newton iteration with
    a bisection bracket on [1, 1.5]; returns 1/x at the root.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = 1.0, 1.5
    _assert_tail_small(hi)
    f_lo = _gauss_integral(lo) - 1.0
    f_hi = _gauss_integral(hi) - 1.0
    if not (f_lo < 0.0 < f_hi):
        raise AssertionError("root bracket [1, 1.5] is invalid")
    x = 1.25
    for _ in range(200):
        f = _gauss_integral(x) - 1.0
        if f < 0.0:
            lo = x
        else:
            hi = x
        step = f / math.exp(-x * x / 2.0)
        nxt = x - step
        if not (lo <= nxt <= hi):
            nxt = (lo + hi) / 2.0
        if abs(nxt - x) < tolerance:
            return 1.0 / nxt
        x = nxt
    raise RuntimeError(f"root finding did not reach tolerance {tolerance}")


def gamma2(tolerance: float = 1e-9) -> float:
    """Amplitude for 132 avoiders: e^{x^2/2} at the root above."""
    x = 1.0 / rho2(tolerance)
    return math.exp(x * x / 2.0)


def bell_lambda(n: float) -> float:
    """The solution x of x*ln(x) = n (n > 0), by Newton iteration."""
    if n <= 0:
        raise ValueError("defined for n > 0")
    x = n / math.log(n) if n >= 3 else 2.0
    for _ in range(100):
        f = x * math.log(x) - n
        fp = math.log(x) + 1.0
        nxt = x - f / fp
        if nxt <= 0:
            nxt = x / 2.0
        if abs(nxt - x) <= 1e-12 * max(1.0, abs(x)):
            return nxt
        x = nxt
    raise RuntimeError("lambda(n) iteration did not converge")


def bell_asymptotic(n: float) -> float:
    """Asymptotic Bell number (1/sqrt(n)) lam^(n+1/2) e^(lam-n-1)."""
    lam = bell_lambda(n)
    log_value = (
        -0.5 * math.log(n) + (n + 0.5) * math.log(lam) + lam - n - 1.0
    )
    return math.exp(log_value)


@dataclass
class AsymptoticsReport:
    """Growth estimate for one pattern's counting sequence.

    ``ratios`` is the nth-root sequence (index n, placeholder at 0);
    ``growth_estimate`` comes from the requested method."""

    pattern_text: str
    ratios: list[float]
    growth_estimate: float
    method: str
    reference: Optional[float] = None

    def reference_gap(self) -> Optional[float]:
        if self.reference is None:
            return None
        return abs(self.growth_estimate - self.reference)


def consecutive_ratios(counts) -> list[float]:
    """Entries a_{n+1}/((n+1) a_n); geometric convergence to the limit
    when the avoider EGF has a simple dominant singularity."""
    seq = getattr(counts, "counts", counts)
    out = [float("nan")]
    for n in range(1, len(seq)):
        prev, cur = seq[n - 1], seq[n]
        out.append(float(Fraction(cur, n * prev)) if prev else float("nan"))
    return out


def estimate_growth(counts: CountSequence,
                    method: str = METHOD_CONSECUTIVE_RATIO,
                    reference: Optional[float] = None) -> AsymptoticsReport:
    """Estimate lim (alpha_n/n!)^(1/n) from a counting sequence."""
    seq = counts.counts
    if len(seq) < 5:
        raise ValueError("need at least 5 terms to estimate a growth rate")
    roots = nth_root_ratios(counts)
    if method == METHOD_NTH_ROOT:
        estimate = roots[-1]
    elif method == METHOD_CONSECUTIVE_RATIO:
        estimate = consecutive_ratios(counts)[-1]
    else:
        raise ValueError(f"unknown method {method!r}")
    return AsymptoticsReport(
        pattern_text=str(counts.pattern),
        ratios=roots,
        growth_estimate=estimate,
        method=method,
        reference=reference,
    )


def fekete_check(counts: CountSequence) -> bool:
    """Is alpha_n/n! submultiplicative over the whole available range?

    Checks alpha_{m+n} * m! * n! <= alpha_m * alpha_n * (m+n)! for all
    m, n with m+n within range, in exact integer arithmetic.
    """
    seq = counts.counts
    n_max = len(seq) - 1
    for m in range(n_max + 1):
        for n in range(m, n_max - m + 1):
            lhs = seq[m + n] * factorial(m) * factorial(n)
            rhs = seq[m] * seq[n] * factorial(m + n)
            if lhs > rhs:
                return False
    return True
