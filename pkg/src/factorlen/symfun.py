"""Complete homogeneous symmetric polynomials and their probability density.

For distinct nodes x_1 < ... < x_k the kernel

    H(x) = (k-1)/2 * sum_r |x_r - x| (x_r - x)**(k-3) / prod_{j!=r} (x_r - x_j)

is a probability density supported on [x_1, x_k], and the degree-p
complete homogeneous polynomial h_p equals C(p+k-1, p) times the pth
moment of H.  That integral representation extends h to arbitrary real
degree z (for positive nodes) and yields an exponential generating
function identity linking the h_p to a sum of exponentials, plus a
bordered-Vandermonde determinant identity, both of which are exposed
here as residual checks.

On each interval between consecutive nodes every |x_r - x| resolves to a
fixed sign, so H is an exact piecewise polynomial of degree k-2 once the
nodes are rational; all exact construction happens in Fractions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NodesNotDistinct,
    NodesNotSorted,
    NonPositiveNode,
    ValidationError,
    ZeroNode,
)
from .linalg import det_rational
from .ratpoly import PiecewisePoly, binom_power, poly_add, poly_scale
from .semigroup import NumericalSemigroup

#: Largest p accepted by the determinant identity check.
SCHUR_P_BOUND = 12


def h_complete(p: int, xs) -> Fraction:
    """Exact h_p: the sum of all degree-p monomials in the given variables.

    Uses the one-variable-at-a-time recurrence
    h_p(x_1..x_j) = h_p(x_1..x_{j-1}) + x_j * h_{p-1}(x_1..x_j),
    equivalent to expanding the generating product 1/prod(1 - x_i z).
    """
    if p < 0:
        raise ValidationError("degree must be >= 0")
    vals = [Fraction(x) for x in xs]
    if not vals:
        raise ValidationError("need at least one variable")
    h = [Fraction(1)] + [Fraction(0)] * p
    for x in vals:
        for j in range(1, p + 1):
            h[j] += x * h[j - 1]
    return h[p]


@dataclass(frozen=True)
class HDensity:
    """Piecewise-polynomial density on [nodes[0], nodes[-1]]."""

    nodes: tuple[Fraction, ...]
    pw: PiecewisePoly

    @property
    def k(self) -> int:
        return len(self.nodes)

    def __call__(self, x):
        return self.pw(x)

    def moment(self, p: int) -> Fraction:
        return self.pw.moment(p)


def _check_nodes(xs) -> list[Fraction]:
    vals = [Fraction(x) for x in xs]
    if len(set(vals)) != len(vals):
        raise NodesNotDistinct("nodes must be pairwise distinct")
    if any(a >= b for a, b in zip(vals, vals[1:])):
        raise NodesNotSorted("nodes must be strictly increasing")
    return vals


def build_H(xs, exact: bool = True) -> HDensity:
    """Construct the density H for strictly increasing distinct nodes.

    Between consecutive nodes the sign of every x_r - x is constant, so
    each summand contributes sign * (x_r - x)**(k-2) and every piece
    expands to a genuine polynomial.  With exact=False the pieces are
    converted to float coefficients after the exact construction.
    """
    nodes = _check_nodes(xs)
    k = len(nodes)
    if k < 3:
        raise ValidationError(f"need at least 3 nodes, got {k}")
    weights = []
    for r, xr in enumerate(nodes):
        d = Fraction(1)
        for j, xj in enumerate(nodes):
            if j != r:
                d *= xr - xj
        weights.append(Fraction(k - 1, 2) / d)
    pieces = []
    for i in range(k - 1):
        piece = [Fraction(0)]
        for r, xr in enumerate(nodes):
            sign = 1 if r >= i + 1 else -1
            piece = poly_add(piece, poly_scale(binom_power(xr, -1, k - 2), sign * weights[r]))
        pieces.append(piece)
    pw = PiecewisePoly(nodes, pieces)
    if not exact:
        pw = PiecewisePoly(nodes, [[Fraction(float(c)) for c in p] for p in pw.pieces])
    return HDensity(tuple(nodes), pw)


def h_fractional(z: float, xs, abs_tol: float = 1e-10) -> float:
    """h of arbitrary real degree z via the integral against H.

    Defined as (z+k-1)...(z+1)/(k-1)! times the integral of t**z H(t);
    all nodes must be positive so t**z is single valued on the support.
    The integral reduces per piece to closed-form antiderivatives of
    t**(z+m) (a logarithm when z+m = -1), accurate well below abs_tol for
    the exactly-constructed pieces.  Agrees with h_complete at z in N.
    """
    nodes = _check_nodes(xs)
    if nodes[0] <= 0:
        raise NonPositiveNode("fractional degree requires positive nodes")
    k = len(nodes)
    if abs_tol <= 0:
        raise ValidationError("abs_tol must be positive")
    prefactor = 1.0
    for j in range(1, k):
        prefactor *= (z + j) / j
    if prefactor == 0.0:
        return 0.0
    dens = build_H(nodes)
    return prefactor * dens.pw.integrate_power_real(float(z))


def schur_identity_residual(p: int, xs) -> Fraction:
    """det of the Vandermonde matrix with last column bumped to power p+k-1,
    minus h_p times det of the plain Vandermonde matrix.  Identically zero.
    """
    vals = [Fraction(x) for x in xs]
    if len(set(vals)) != len(vals):
        raise NodesNotDistinct("variables must be pairwise distinct")
    k = len(vals)
    if k < 2:
        raise ValidationError("need at least 2 variables")
    if not 0 <= p <= SCHUR_P_BOUND:
        raise ValidationError(f"p must be in [0, {SCHUR_P_BOUND}]")
    bordered = [[x**e for e in range(k - 1)] + [x ** (p + k - 1)] for x in vals]
    det_b = det_rational(bordered)
    det_v = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            det_v *= vals[j] - vals[i]
    return det_b - h_complete(p, vals) * det_v


def egf_residual(xs, z, truncation: int) -> float:
    """|sum_p h_p z^(p+k-1)/(p+k-1)! - sum_r e^(x_r z)/prod(x_r - x_j)|.

    Both series are entire in z, so the residual of the truncated left
    side tends to zero as the truncation grows.
    """
    vals = [float(x) for x in xs]
    k = len(vals)
    if len(set(vals)) != len(vals):
        raise NodesNotDistinct("nodes must be pairwise distinct")
    if any(x == 0 for x in vals):
        raise ZeroNode("nodes must be nonzero")
    if truncation < k:
        raise ValidationError("truncation must be at least the number of nodes")
    zc = complex(z)

    h = [1.0] + [0.0] * truncation
    for x in vals:
        for j in range(1, truncation + 1):
            h[j] += x * h[j - 1]

    lhs = 0j
    term = zc ** (k - 1) / math.factorial(k - 1)
    for p in range(truncation + 1):
        lhs += h[p] * term
        term *= zc / (p + k)

    rhs = 0j
    for r, xr in enumerate(vals):
        d = 1.0
        for j, xj in enumerate(vals):
            if j != r:
                d *= xr - xj
        rhs += cmath.exp(xr * zc) / d
    return abs(lhs - rhs)


def characteristic_fn(S: NumericalSemigroup, z: float) -> complex:
    """Characteristic function of the limiting length distribution.

    Closed form (k-1)! sum_r e^(i x_r z) / ((iz)^(k-1) prod(x_r - x_j))
    with x_r = 1/n_r; near z = 0 the removable singularity makes that
    form unstable, so a truncated moment series takes over with tail
    below 1e-14.
    """
    gens = S.generators
    k = S.k
    xs = [Fraction(1, n) for n in gens]
    if z == 0:
        return complex(1.0, 0.0)
    if abs(z) < 1e-2 * k:
        # moments are at most 1, so the tail is below e^|z| |z|^(P+1)/(P+1)!
        total = 0j
        iz_pow = complex(1.0, 0.0)
        p = 0
        while True:
            m_p = h_complete(p, xs) / math.comb(p + k - 1, p)
            total += float(m_p) * iz_pow / math.factorial(p)
            p += 1
            if math.exp(abs(z)) * abs(z) ** p / math.factorial(p) < 1e-15 or p > 80:
                break
            iz_pow *= complex(0.0, z)
        return total
    floats = [float(x) for x in xs]
    acc = 0j
    for r, xr in enumerate(floats):
        d = 1.0
        for j, xj in enumerate(floats):
            if j != r:
                d *= xr - xj
        acc += cmath.exp(complex(0.0, xr * z)) / d
    return math.factorial(k - 1) * acc / complex(0.0, z) ** (k - 1)
