"""Exact algebra of exponential polynomials sum_i p_i(z) e^{iz}.

This family is closed under products, multiplication by e^z, and
integration from 0, which is exactly what the block-count recurrences

    b_0 = z,             b_k = k^2     * II( b_{k-1} e^z )
    c_0 = e^z - 1 - z,   c_k = k(k+1)  * II( c_{k-1} e^z )

need (II denotes the double integral from 0).  The same functions have
closed forms in terms of harmonic numbers h_k = 1 + 1/2 + ... + 1/k:

    b_k = sum_i C(k,i)^2 [z + 2(h_{k-i} - h_i)] e^{iz}
    c_k = e^{(k+1)z}/(k+1)
          - sum_i C(k,i) C(k+1,i) [z + 2(h_{k-i} - h_i) + 1/(k+1-i)] e^{iz}

and both routes are kept so they can be checked against each other term
by term.  The series S = sum_{k>=1} (b_k + c_k) is finite at any fixed
truncation order because b_k starts at degree 2k+1 and c_k at 2k+2.

Polynomials are stored dense (low to high) with rational coefficients;
the representation is canonical (no zero polynomials, no trailing zero
coefficients), so equality is plain dictionary comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .series import EgfSeries, FloatSeries, integrate

Poly = tuple[Fraction, ...]


def _strip(coeffs: Sequence) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _strip(
        [
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
            for i in range(n)
        ]
    )


def _poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _strip(out)


class ExpPoly:
    """Finite sum of p_i(z) * e^{iz} with nonnegative integer frequencies."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Sequence] | None = None):
        canon: dict[int, Poly] = {}
        for freq, poly in (terms or {}).items():
            if freq < 0:
                raise ValueError("frequencies must be nonnegative")
            p = _strip(poly)
            if p:
                canon[int(freq)] = p
        self.terms = canon

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def from_poly(cls, coeffs: Sequence) -> "ExpPoly":
        return cls({0: coeffs})

    @classmethod
    def from_term(cls, freq: int, coeffs: Sequence) -> "ExpPoly":
        return cls({freq: coeffs})

    # -- algebra ----------------------------------------------------------
    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for f, p in other.terms.items():
            out[f] = _poly_add(out.get(f, ()), p)
        return ExpPoly(out)

    def __neg__(self) -> "ExpPoly":
        return ExpPoly({f: [-c for c in p] for f, p in self.terms.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        out: dict[int, Poly] = {}
        for f1, p1 in self.terms.items():
            for f2, p2 in other.terms.items():
                prod = _poly_mul(p1, p2)
                out[f1 + f2] = _poly_add(out.get(f1 + f2, ()), prod)
        return ExpPoly(out)

    def scale(self, q) -> "ExpPoly":
        q = Fraction(q)
        return ExpPoly({f: [q * c for c in p] for f, p in self.terms.items()})

    def mul_exp(self) -> "ExpPoly":
        """Multiply by e^z: every frequency shifts up by one."""
        return ExpPoly({f + 1: p for f, p in self.terms.items()})

    def integrate0(self) -> "ExpPoly":
        """Antiderivative vanishing at z = 0.

        For z^m e^{iz} with i >= 1 repeated integration by parts gives
        e^{iz} * sum_j c_j z^{m-j} with c_0 = 1/i and
        c_j = -(m-j+1)/i * c_{j-1}; the value at 0 (that is, c_m) is
        subtracted off.  Frequency 0 is plain polynomial integration.
        """
        out = ExpPoly.zero()
        for f, p in self.terms.items():
            if f == 0:
                out = out + ExpPoly.from_poly(
                    [0] + [c / (j + 1) for j, c in enumerate(p)]
                )
                continue
            for m, a in enumerate(p):
                if a == 0:
                    continue
                c = [Fraction(0)] * (m + 1)  # c[j] multiplies z^(m-j)
                c[0] = Fraction(1, f)
                for j in range(1, m + 1):
                    c[j] = -Fraction(m - j + 1, f) * c[j - 1]
                piece = [Fraction(0)] * (m + 1)
                for j in range(m + 1):
                    piece[m - j] = a * c[j]
                out = out + ExpPoly.from_term(f, piece)
                out = out + ExpPoly.from_poly([-a * c[m]])
        return out

    # -- comparison and display --------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, ExpPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((f, p) for f, p in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for f in sorted(self.terms, reverse=True):
            poly = self.terms[f]
            if f == 0:
                chunks.append(_format_poly(poly))
                continue
            expo = "e^z" if f == 1 else f"e^{{{f}z}}"
            mono_count = sum(1 for c in poly if c != 0)
            body = _format_poly(poly)
            if mono_count > 1:
                chunks.append(f"({body}){expo}")
            elif body == "1":
                chunks.append(expo)
            elif body == "-1":
                chunks.append(f"-{expo}")
            elif mono_count == 1 and poly[0] != 0 and poly[0].denominator != 1:
                c = poly[0]
                sign = "-" if c < 0 else ""
                num = abs(c.numerator)
                head = expo if num == 1 else f"{num}{expo}"
                chunks.append(f"{sign}{head}/{c.denominator}")
            else:
                chunks.append(f"{body}{expo}")
        text = chunks[0]
        for ch in chunks[1:]:
            text += ch if ch.startswith("-") else "+" + ch
        return text

    def __repr__(self) -> str:
        return f"ExpPoly({self})"

    # -- expansion ----------------------------------------------------------
    def to_series(self, order: int) -> EgfSeries:
        """Taylor expansion: z^m e^{iz} contributes i^{n-m}/(n-m)! at z^n."""
        coeffs = [Fraction(0)] * (order + 1)
        for f, p in self.terms.items():
            for m, a in enumerate(p):
                if a == 0:
                    continue
                if f == 0:
                    if m <= order:
                        coeffs[m] += a
                    continue
                power = 1
                for n in range(m, order + 1):
                    coeffs[n] += a * Fraction(power, math.factorial(n - m))
                    power *= f
        return EgfSeries(coeffs)

    def min_degree(self, search_limit: int) -> int | None:
        """Index of the first nonzero series coefficient, or None."""
        expanded = self.to_series(search_limit)
        for n, c in enumerate(expanded.coeffs):
            if c != 0:
                return n
        return None


def _format_poly(poly: Poly) -> str:
    parts = []
    for m in range(len(poly) - 1, -1, -1):
        c = poly[m]
        if c == 0:
            continue
        if m == 0:
            mono = str(c)
        else:
            zpow = "z" if m == 1 else f"z^{m}"
            if c == 1:
                mono = zpow
            elif c == -1:
                mono = f"-{zpow}"
            elif c.denominator == 1:
                mono = f"{c}{zpow}"
            else:
                mono = f"{zpow}/{c.denominator}" if c.numerator == 1 else f"{c.numerator}{zpow}/{c.denominator}"
        parts.append(mono)
    text = parts[0]
    for p in parts[1:]:
        text += p if p.startswith("-") else "+" + p
    return text


def harmonic(k: int) -> Fraction:
    """h_k = 1 + 1/2 + ... + 1/k, with h_0 = 0."""
    if k < 0:
        raise ValueError("harmonic index must be nonnegative")
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def b_base() -> ExpPoly:
    """Single block with no wrap-around words: just the marker, EGF z."""
    return ExpPoly.from_poly([0, 1])


def c_base() -> ExpPoly:
    """Marker plus a nonempty leading word: e^z - 1 - z."""
    return ExpPoly({1: (1,), 0: (-1, -1)})


def b_recurrence(k: int) -> ExpPoly:
    """b_k by iterating b_k = k^2 * double-integral(b_{k-1} e^z)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = b_base()
    for j in range(1, k + 1):
        b = b.mul_exp().integrate0().integrate0().scale(j * j)
    return b


def c_recurrence(k: int) -> ExpPoly:
    """c_k by iterating c_k = k(k+1) * double-integral(c_{k-1} e^z)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = c_base()
    for j in range(1, k + 1):
        c = c.mul_exp().integrate0().integrate0().scale(j * (j + 1))
    return c


def b_closed(k: int) -> ExpPoly:
    """Closed form sum_i C(k,i)^2 [z + 2(h_{k-i} - h_i)] e^{iz}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = ExpPoly.zero()
    for i in range(k + 1):
        w = Fraction(math.comb(k, i)) ** 2
        const = 2 * (harmonic(k - i) - harmonic(i))
        out = out + ExpPoly.from_term(i, (w * const, w))
    return out


def c_closed(k: int) -> ExpPoly:
    """Closed form with the extra e^{(k+1)z}/(k+1) head term."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = ExpPoly.from_term(k + 1, (Fraction(1, k + 1),))
    for i in range(k + 1):
        w = Fraction(math.comb(k, i) * math.comb(k + 1, i))
        const = 2 * (harmonic(k - i) - harmonic(i)) + Fraction(1, k + 1 - i)
        out = out - ExpPoly.from_term(i, (w * const, w))
    return out


def s_series(order: int) -> EgfSeries:
    """Truncation of S = sum_{k>=1} (b_k + c_k) to the given order.

    b_k starts at degree 2k+1 and c_k at 2k+2, so the sum over
    k <= ceil(order/2) is complete; the first omitted pair is checked to
    contribute nothing below the truncation order.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    k_max = (order + 1) // 2
    total = EgfSeries.zero(order)
    for k in range(1, k_max + 1):
        total = total + b_closed(k).to_series(order) + c_closed(k).to_series(order)
    omitted_b = b_closed(k_max + 1).min_degree(order)
    omitted_c = c_closed(k_max + 1).min_degree(order)
    if omitted_b is not None or omitted_c is not None:
        raise AssertionError(
            f"summation cutoff k={k_max} too small at order {order}"
        )
    return total


def s_series_float(order: int) -> FloatSeries:
    """Float-mode S for figure-scale orders.

    Built by running the b/c recurrences directly on truncated float
    series; all coefficients are nonnegative, so there is no
    cancellation.  Expanding the closed forms instead would subtract
    binomially large terms and lose everything to rounding.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    e = FloatSeries.exp_z(order)
    b = FloatSeries.z(order)
    c = e - FloatSeries.one(order) - FloatSeries.z(order)
    total = FloatSeries.zero(order)
    k = 1
    while 2 * k + 1 <= order:
        b = integrate(integrate(b * e)).scale(k * k)
        c = integrate(integrate(c * e)).scale(k * (k + 1))
        total = total + b + c
        k += 1
    return total
