"""Exact univariate polynomials and piecewise assemblies over the rationals.

Coefficient lists are ascending (coeffs[m] multiplies x**m) and hold
Fractions.  Horner evaluation accepts Fraction or float arguments and
propagates the argument's exactness.  PiecewisePoly glues polynomial
pieces over consecutive breakpoint intervals; it is the common backing
store for the probability densities built elsewhere in this package.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from fractions import Fraction


def poly_eval(coeffs, x):
    acc = coeffs[-1] if coeffs else 0
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def poly_add(a, b):
    n = max(len(a), len(b))
    return [
        (a[m] if m < len(a) else 0) + (b[m] if m < len(b) else 0) for m in range(n)
    ]


def poly_scale(a, c):
    return [c * am for am in a]


def poly_deriv(a):
    return [m * a[m] for m in range(1, len(a))]


def poly_antideriv(a):
    return [Fraction(0)] + [Fraction(a[m], m + 1) for m in range(len(a))]


def binom_power(a, s, m):
    """Coefficients of (a + s*x)**m for s in {+1, -1}."""
    a = Fraction(a)
    return [Fraction(math.comb(m, i)) * a ** (m - i) * s**i for i in range(m + 1)]


def _stable_power_quotient(hi, lo, s):
    """(hi**s - lo**s) / s, stable as s -> 0 (limit log(hi/lo)); hi, lo > 0."""
    if abs(s) < 1e-9:
        return (math.expm1(s * math.log(hi)) - math.expm1(s * math.log(lo))) / s if s else math.log(hi / lo)
    return (hi**s - lo**s) / s


class PiecewisePoly:
    """Piecewise polynomial on [breaks[0], breaks[-1]], zero outside.

    breaks are strictly increasing Fractions; pieces[i] is the
    coefficient list valid on [breaks[i], breaks[i+1]].
    """

    def __init__(self, breaks, pieces):
        if len(pieces) != len(breaks) - 1:
            raise ValueError("need exactly one piece per breakpoint interval")
        self.breaks = tuple(Fraction(b) for b in breaks)
        if any(b >= c for b, c in zip(self.breaks, self.breaks[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        self.pieces = tuple(tuple(Fraction(c) for c in piece) for piece in pieces)

    @property
    def degree(self) -> int:
        return max(len(p) - 1 for p in self.pieces)

    def piece_index(self, x) -> int:
        """Index of the piece whose closed interval contains x (right-closed at the end)."""
        i = bisect_right(self.breaks, x) - 1
        return min(max(i, 0), len(self.pieces) - 1)

    def __call__(self, x):
        if x < self.breaks[0] or x > self.breaks[-1]:
            return 0 * x
        return poly_eval(self.pieces[self.piece_index(x)], x)

    def piece_integrals(self) -> list[Fraction]:
        out = []
        for i, piece in enumerate(self.pieces):
            anti = poly_antideriv(piece)
            out.append(poly_eval(anti, self.breaks[i + 1]) - poly_eval(anti, self.breaks[i]))
        return out

    def total_integral(self) -> Fraction:
        return sum(self.piece_integrals(), Fraction(0))

    def antiderivative_pieces(self) -> list[list[Fraction]]:
        """Antiderivatives with constants accumulated so the result is 0 at breaks[0]."""
        out = []
        acc = Fraction(0)
        for i, piece in enumerate(self.pieces):
            anti = poly_antideriv(piece)
            anti[0] = acc - poly_eval(anti, self.breaks[i])
            out.append(anti)
            acc = poly_eval(anti, self.breaks[i + 1])
        return out

    def moment(self, p: int) -> Fraction:
        """Exact integral of x**p times the piecewise polynomial."""
        total = Fraction(0)
        for i, piece in enumerate(self.pieces):
            shifted = [Fraction(0)] * p + list(piece)
            anti = poly_antideriv(shifted)
            total += poly_eval(anti, self.breaks[i + 1]) - poly_eval(anti, self.breaks[i])
        return total

    def integrate_power_real(self, z: float) -> float:
        """Integral of t**z times the piecewise polynomial; requires breaks[0] > 0.

        Each monomial integrates in closed form; the exponent z+m+1 = 0
        case degenerates to a logarithm and nearby exponents use an
        expm1-based form to avoid cancellation.
        """
        if self.breaks[0] <= 0:
            raise ValueError("t**z integration needs positive support")
        total = 0.0
        for i, piece in enumerate(self.pieces):
            lo, hi = float(self.breaks[i]), float(self.breaks[i + 1])
            for m, c in enumerate(piece):
                if c:
                    total += float(c) * _stable_power_quotient(hi, lo, z + m + 1)
        return total

    def integrate_recip(self) -> float:
        return self.integrate_power_real(-1.0)

    def integrate_log(self) -> float:
        """Integral of log(t) times the piecewise polynomial; requires breaks[0] > 0."""
        if self.breaks[0] <= 0:
            raise ValueError("log integration needs positive support")
        total = 0.0
        for i, piece in enumerate(self.pieces):
            lo, hi = float(self.breaks[i]), float(self.breaks[i + 1])
            for m, c in enumerate(piece):
                if c:
                    # d/dt [t^(m+1) (log t / (m+1) - 1/(m+1)^2)] = t^m log t
                    def term(t):
                        return t ** (m + 1) * (math.log(t) / (m + 1) - 1.0 / (m + 1) ** 2)

                    total += float(c) * (term(hi) - term(lo))
        return total

    def derivative(self) -> "PiecewisePoly":
        return PiecewisePoly(self.breaks, [poly_deriv(list(p)) or [Fraction(0)] for p in self.pieces])

    def as_float_pieces(self) -> list[list[float]]:
        return [[float(c) for c in piece] for piece in self.pieces]
