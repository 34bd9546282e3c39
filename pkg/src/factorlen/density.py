"""Limiting density of normalized factorization lengths.

For a semigroup with generators n_1 < ... < n_k the fractions l/n of
factorization lengths of n converge in distribution, as n grows, to an
exact piecewise polynomial density F supported on [1/n_k, 1/n_1] with
breakpoints at every 1/n_i: the symmetric-function kernel H evaluated at
the reciprocal generators.  This module builds F with exact rational
coefficients, integrates it in closed form, and derives the asymptotic
constants: each descriptive statistic of the length multiset of n grows
like (constant) * n with the constants computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad

from .errors import ToleranceNotMet, WrongArity
from .ratpoly import PiecewisePoly, poly_deriv, poly_eval
from .semigroup import NumericalSemigroup
from .symfun import build_H, h_complete


class DensityF:
    """The limiting density as exact pieces plus accumulated CDF pieces."""

    def __init__(self, breakpoints, pieces):
        self._pw = PiecewisePoly(breakpoints, pieces)
        self.breakpoints = self._pw.breaks
        self.pieces = self._pw.pieces
        self.cdf_pieces = tuple(tuple(p) for p in self._pw.antiderivative_pieces())

    @property
    def support(self):
        return self.breakpoints[0], self.breakpoints[-1]

    def __call__(self, x):
        return eval_density(self, x)

    def moment(self, p: int) -> Fraction:
        return self._pw.moment(p)

    def total_integral(self) -> Fraction:
        return self._pw.total_integral()


def build_density(S: NumericalSemigroup) -> DensityF:
    """Exact construction of F from the reciprocal generators."""
    nodes = [Fraction(1, n) for n in reversed(S.generators)]
    dens = build_H(nodes, exact=True)
    return DensityF(dens.nodes, [list(p) for p in dens.pw.pieces])


def eval_density(D: DensityF, x):
    """F(x); zero outside the support, exact for rational x."""
    if x < D.breakpoints[0] or x > D.breakpoints[-1]:
        return 0 * x
    return poly_eval(D.pieces[D._pw.piece_index(x)], x)


def cdf(D: DensityF, x):
    """Integral of F up to x, clamped to [0, 1]; exact for rational x."""
    if x <= D.breakpoints[0]:
        return 0 * x
    if x >= D.breakpoints[-1]:
        return 1 if isinstance(x, (int, Fraction)) else 1.0
    val = poly_eval(D.cdf_pieces[D._pw.piece_index(x)], x)
    return min(max(val, 0 * x), 1 if isinstance(val, Fraction) else 1.0)


def asymptotic_moment(S: NumericalSemigroup, p: int) -> Fraction:
    """Exact pth moment of F: h_p at the reciprocal generators over C(p+k-1, p)."""
    k = S.k
    xs = [Fraction(1, n) for n in S.generators]
    return h_complete(p, xs) / math.comb(p + k - 1, p)


@dataclass(frozen=True)
class AsymptoticStats:
    """Asymptotic constants: each statistic of the length multiset of n
    behaves like constant * n (skewness is scale free, variance carries
    n**2, and the geometric mean is n * exp(geometric_log_const))."""

    mean_slope: Fraction
    variance_coeff: Fraction
    stdev_coeff: float
    skewness_const: float
    median_const: float
    mode_const: Fraction | float
    harmonic_const: float
    geometric_log_const: float
    min_slope: Fraction
    max_slope: Fraction


# --- kernels with closed-form integrals against F ---------------------------


@dataclass(frozen=True)
class MomentKernel:
    p: int

    def __call__(self, t):
        return t**self.p


class _ReciprocalKernel:
    def __call__(self, t):
        return 1.0 / t


class _LogKernel:
    def __call__(self, t):
        return math.log(t)


def moment_kernel(p: int) -> MomentKernel:
    return MomentKernel(p)


reciprocal_kernel = _ReciprocalKernel()
log_kernel = _LogKernel()


def expectation(D: DensityF, g, abs_tol: float = 1e-10):
    """Integral of g against F.

    The built-in kernels (moment_kernel(p), reciprocal_kernel, log_kernel)
    integrate in closed form per piece — exactly, for the moment kernel.
    Any other continuous callable falls back to adaptive quadrature run
    piece by piece, so panels never straddle a breakpoint.
    """
    if isinstance(g, MomentKernel):
        return D.moment(g.p)
    if isinstance(g, _ReciprocalKernel):
        return D._pw.integrate_recip()
    if isinstance(g, _LogKernel):
        return D._pw.integrate_log()
    total = 0.0
    err = 0.0
    per_piece = abs_tol / len(D.pieces)
    for i in range(len(D.pieces)):
        lo, hi = float(D.breakpoints[i]), float(D.breakpoints[i + 1])
        piece = D.pieces[i]
        val, e = quad(lambda t, p=piece: g(t) * float(poly_eval(p, t)), lo, hi, epsabs=per_piece)
        total += val
        err += e
    if err > abs_tol:
        raise ToleranceNotMet(f"quadrature error {err} exceeds {abs_tol}")
    return total


# --- root/argmax machinery ---------------------------------------------------


def _bisect_poly(coeffs, target, lo: Fraction, hi: Fraction, iters: int = 80) -> Fraction:
    """Root of poly - target inside [lo, hi] by exact-rational bisection."""
    flo = poly_eval(coeffs, lo) - target
    fhi = poly_eval(coeffs, hi) - target
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    assert (flo < 0) != (fhi < 0), "root not bracketed"
    for _ in range(iters):
        mid = (lo + hi) / 2
        fmid = poly_eval(coeffs, mid) - target
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def _real_roots_in(coeffs, lo, hi) -> list[float]:
    """Real roots of an exact polynomial inside [lo, hi], as floats."""
    cs = [float(c) for c in coeffs]
    while cs and cs[-1] == 0.0:
        cs.pop()
    if len(cs) <= 1:
        return []
    if len(cs) == 2:
        roots = [-cs[0] / cs[1]]
    else:
        roots = [r.real for r in np.roots(cs[::-1]) if abs(r.imag) < 1e-9]
    lo_f, hi_f = float(lo), float(hi)
    return [r for r in roots if lo_f <= r <= hi_f]


def _median_const(D: DensityF) -> float:
    half = Fraction(1, 2)
    cdf_at = [Fraction(0)] + [
        poly_eval(D.cdf_pieces[i], D.breakpoints[i + 1]) for i in range(len(D.pieces))
    ]
    for i in range(len(D.pieces)):
        if cdf_at[i] == half:
            return float(D.breakpoints[i])
        if cdf_at[i] < half <= cdf_at[i + 1]:
            piece = D.cdf_pieces[i]
            est = _bisect_poly(piece, half, D.breakpoints[i], D.breakpoints[i + 1])
            est_f = float(est)
            if len(piece) - 1 <= 3:
                shifted = list(piece)
                shifted[0] -= half
                for r in _real_roots_in(shifted, D.breakpoints[i], D.breakpoints[i + 1]):
                    if abs(r - est_f) < 1e-9:
                        return r
            return est_f
    return float(D.breakpoints[-1])


def _mode_const(D: DensityF) -> Fraction | float:
    """Argmax of F: scan breakpoints and per-piece stationary points.

    Unimodality is never assumed; every candidate is evaluated and ties
    resolve to the smallest abscissa.  Rational candidates keep exact
    values so the winner is exact whenever the argmax is rational.
    """
    candidates: list = list(D.breakpoints)
    for i, piece in enumerate(D.pieces):
        d = poly_deriv(list(piece))
        if len(d) == 2 and d[1] != 0:
            r = -d[0] / d[1]
            if D.breakpoints[i] < r < D.breakpoints[i + 1]:
                candidates.append(r)
        else:
            candidates.extend(_real_roots_in(d, D.breakpoints[i], D.breakpoints[i + 1]))
    candidates.sort(key=float)
    best_x = None
    best_val = None
    for x in candidates:
        val = eval_density(D, x if isinstance(x, Fraction) else float(x))
        if best_val is None or _value_gt(val, best_val):
            best_val, best_x = val, x
    return best_x


def _value_gt(a, b) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a > b
    return float(a) > float(b)


# --- closed forms for three and four generators ------------------------------


def _k3_median(S: NumericalSemigroup) -> float:
    n1, n2, n3 = S.generators
    a, b, c = Fraction(1, n3), Fraction(1, n1), Fraction(1, n2)
    if c >= (a + b) / 2:
        return float(a) + math.sqrt(float((b - a) * (c - a)) / 2)
    return float(b) - math.sqrt(float((b - a) * (b - c)) / 2)


def _k3_skewness(S: NumericalSemigroup) -> float:
    n1, n2, n3 = S.generators
    a, b, c = Fraction(1, n1), Fraction(1, n2), Fraction(1, n3)
    num = math.sqrt(2) * float((a + c - 2 * b) * (2 * a - c - b) * (a - 2 * c + b))
    q = a * a + b * b + c * c - a * b - b * c - c * a
    return num / (5 * float(q) ** 1.5)


def _k4_mode(S: NumericalSemigroup) -> Fraction:
    n1, n2, n3, n4 = S.generators
    return Fraction(n1 * n2 - n3 * n4, n1 * n2 * n3 + n1 * n2 * n4 - n1 * n3 * n4 - n2 * n3 * n4)


def _k4_skewness(S: NumericalSemigroup) -> float:
    a, b, c, d = (Fraction(1, n) for n in S.generators)
    num = 2 * math.sqrt(5) * float((a + b - c - d) * (a - b + c - d) * (a - b - c + d))
    q = 3 * (a * a + b * b + c * c + d * d) - 2 * (a * b + a * c + b * c + a * d + b * d + c * d)
    return num / float(q) ** 1.5


def skew_symmetry_condition(S: NumericalSemigroup) -> bool:
    """For four generators: whether one of the two reciprocal-sum pairings
    balances exactly, which forces the limiting skewness to vanish."""
    if S.k != 4:
        raise WrongArity(f"condition is defined for 4 generators, got {S.k}")
    a, b, c, d = (Fraction(1, n) for n in S.generators)
    return a + c == b + d or a + d == b + c


def predicted_stats(S: NumericalSemigroup) -> AsymptoticStats:
    """All asymptotic statistic constants of S, computed from exact moments
    of F plus per-piece root finding for the median and mode.  For three
    and four generators the closed forms double-check the generic path.
    """
    D = build_density(S)
    k = S.k
    m1 = asymptotic_moment(S, 1)
    m2 = asymptotic_moment(S, 2)
    m3 = asymptotic_moment(S, 3)
    var = m2 - m1 * m1
    stdev = math.sqrt(var)
    skew_num = m3 - 3 * m1 * var - m1**3
    skew = float(skew_num) / stdev**3 if var else float("nan")

    median = _median_const(D)
    mode = _mode_const(D)
    harmonic = 1.0 / D._pw.integrate_recip()
    geometric_log = D._pw.integrate_log()

    if k == 3:
        assert mode == Fraction(1, S.generators[1])
        assert abs(median - _k3_median(S)) < 1e-12
        assert abs(skew - _k3_skewness(S)) < 1e-12
    if k == 4:
        assert mode == _k4_mode(S)
        assert abs(skew - _k4_skewness(S)) < 1e-12

    return AsymptoticStats(
        mean_slope=m1,
        variance_coeff=var,
        stdev_coeff=stdev,
        skewness_const=skew,
        median_const=median,
        mode_const=mode,
        harmonic_const=harmonic,
        geometric_log_const=geometric_log,
        min_slope=D.breakpoints[0],
        max_slope=D.breakpoints[-1],
    )
