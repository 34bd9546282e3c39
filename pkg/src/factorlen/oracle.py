"""Exact factorization-length data for a single semigroup element.

Everything here is ground truth computed with integer arithmetic: the
full length multiset (how many factorizations of n have each length),
its power sums, explicit factorization enumeration, and descriptive
statistics of the multiset.  The asymptotic machinery in the density and
quasipoly modules is always tested against these values.

The multiset DP is an unbounded knapsack over value v = 0..n with a
length dimension: processing one generator g in place via
f[v][l] += f[v-g][l-1] (v ascending) lets each generator be used any
number of times.  The power-sum DP drops the length dimension and tracks
S_q(v) = sum over lengths of l**q * count(v, l) instead: appending one
copy of a generator turns l into l+1, and (l+1)**q expands through the
binomial theorem, so memory stays linear in n no matter how large the
counts get.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

import numpy as np

from .errors import BudgetExceeded, EmptyMultiset
from .semigroup import NumericalSemigroup

#: Default cap on the multiset DP table, in bytes.
DEFAULT_MEMORY_BUDGET = 1 << 30

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class LengthMultiset:
    """Sparse length -> multiplicity map for one element.

    counts holds exact integers; an element outside the semigroup has an
    empty map.
    """

    element: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def lengths(self) -> list[int]:
        return sorted(self.counts)

    def power_sum(self, p: int) -> int:
        return sum(c * l**p for l, c in self.counts.items())

    def to_csv(self) -> str:
        lines = ["length,count"]
        lines += [f"{l},{self.counts[l]}" for l in self.lengths()]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.element,
            "counts": {str(l): str(self.counts[l]) for l in self.lengths()},
        }


@dataclass(frozen=True)
class PowerSums:
    """values[p] = sum of l**p over the length multiset, p = 0..P."""

    element: int
    values: tuple[int, ...]

    @property
    def count(self) -> int:
        return self.values[0]


@dataclass(frozen=True)
class FactorizationList:
    element: int
    factorizations: list[tuple[int, ...]]
    truncated: bool = False


@dataclass(frozen=True)
class EmpiricalStats:
    mean: float
    variance: float
    stdev: float
    skewness: float
    median: float
    modes: list[int]
    harmonic_mean: float
    geometric_mean: float
    min_length: int
    max_length: int


def _multiset_dp_numpy(gens, n, lmax) -> dict[int, int]:
    f = np.zeros((n + 1, lmax + 1), dtype=np.int64)
    f[0, 0] = 1
    for g in gens:
        for v in range(g, n + 1):
            f[v, 1:] += f[v - g, :-1]
    return {int(l): int(c) for l, c in enumerate(f[n]) if c}


def _multiset_dp_bigint(gens, n, lmax) -> dict[int, int]:
    f = [[0] * (lmax + 1) for _ in range(n + 1)]
    f[0][0] = 1
    for g in gens:
        for v in range(g, n + 1):
            prev = f[v - g]
            cur = f[v]
            for l in range(lmax, 0, -1):
                c = prev[l - 1]
                if c:
                    cur[l] += c
    return {l: c for l, c in enumerate(f[n]) if c}


def _multiset_enumerate_k3(gens, n, lmax) -> dict[int, int]:
    """Direct two-index scan for three generators; O(lmax) memory."""
    n1, n2, n3 = gens
    hist = np.zeros(lmax + 1, dtype=np.int64)
    for a3 in range(n // n3 + 1):
        rem = n - a3 * n3
        a2 = np.arange(rem // n2 + 1, dtype=np.int64)
        r = rem - n2 * a2
        ok = r % n1 == 0
        lengths = a3 + a2[ok] + r[ok] // n1
        if lengths.size:
            hist += np.bincount(lengths, minlength=lmax + 1)
    return {int(l): int(c) for l, c in enumerate(hist) if c}


def length_multiset(
    S: NumericalSemigroup, n: int, memory_budget: int = DEFAULT_MEMORY_BUDGET
) -> LengthMultiset:
    """Exact multiplicity of every factorization length of n.

    Runs the knapsack DP when its (n+1) x (n//n1+1) table fits the byte
    budget; for three generators a low-memory direct enumeration takes
    over past the budget.  Raises BudgetExceeded otherwise (power_sums
    still works there).  n outside the semigroup yields an empty multiset.
    """
    if n < 0:
        return LengthMultiset(n, {})
    if n == 0:
        return LengthMultiset(0, {0: 1})
    gens = S.generators
    lmax = n // gens[0]
    need = 8 * (n + 1) * (lmax + 1)
    if need <= memory_budget:
        # int64 is safe when even the total number of bounded-length
        # compositions cannot reach 2**62
        if math.comb(lmax + S.k, S.k) < _INT64_SAFE:
            counts = _multiset_dp_numpy(gens, n, lmax)
        else:
            counts = _multiset_dp_bigint(gens, n, lmax)
    elif S.k == 3:
        counts = _multiset_enumerate_k3(gens, n, lmax)
    else:
        raise BudgetExceeded(
            f"multiset DP for n={n} needs ~{need} bytes (budget {memory_budget})",
            required=need,
            budget=memory_budget,
        )
    return LengthMultiset(n, counts)


def power_sums_table(S: NumericalSemigroup, n: int, P: int) -> list[list[int]]:
    """table[q][v] = sum of l**q over the length multiset of v, for all v <= n."""
    if P < 0:
        raise ValueError("P must be >= 0")
    binom = [[math.comb(q, j) for j in range(q + 1)] for q in range(P + 1)]
    table = [[0] * (n + 1) for _ in range(P + 1)]
    table[0][0] = 1
    for g in S.generators:
        for v in range(g, n + 1):
            u = v - g
            if not table[0][u]:
                continue
            for q in range(P, 0, -1):
                bq = binom[q]
                row_q = table[q]
                s = 0
                for j in range(q + 1):
                    s += bq[j] * table[j][u]
                row_q[v] += s
            table[0][v] += table[0][u]
    return table


def power_sums(S: NumericalSemigroup, n: int, P: int) -> PowerSums:
    """Exact power sums of the length multiset of n, p = 0..P."""
    if n < 0:
        return PowerSums(n, tuple(0 for _ in range(P + 1)))
    table = power_sums_table(S, n, P)
    return PowerSums(n, tuple(table[q][n] for q in range(P + 1)))


def _iter_factorizations(gens, n):
    k = len(gens)

    def rec(i, rem, prefix):
        if i == k - 1:
            if rem % gens[i] == 0:
                yield prefix + (rem // gens[i],)
            return
        for a in range(rem // gens[i] + 1):
            yield from rec(i + 1, rem - a * gens[i], prefix + (a,))

    yield from rec(0, n, ())


def enumerate_factorizations(S: NumericalSemigroup, n: int, limit: int) -> FactorizationList:
    """Lexicographically ordered factorization exponent vectors, truncated at limit."""
    if n < 0:
        return FactorizationList(n, [])
    got = list(islice(_iter_factorizations(S.generators, n), limit + 1))
    if len(got) > limit:
        return FactorizationList(n, got[:limit], truncated=True)
    return FactorizationList(n, got)


def empirical_stats(M: LengthMultiset) -> EmpiricalStats:
    """Descriptive statistics of a length multiset.

    Moment statistics come from exact power sums (population convention);
    the median averages the two central order statistics; every length of
    maximal multiplicity is reported as a mode.  A singleton or constant
    multiset has zero variance and NaN skewness.
    """
    if not M.counts:
        raise EmptyMultiset(f"element {M.element} has no factorizations")
    lengths = M.lengths()
    total = M.total()
    p1, p2, p3 = (M.power_sum(p) for p in (1, 2, 3))
    mean = Fraction(p1, total)
    var = Fraction(p2, total) - mean * mean
    stdev = math.sqrt(var)
    if var:
        m3c = Fraction(p3, total) - 3 * mean * var - mean**3
        skew = float(m3c) / stdev**3
    else:
        skew = float("nan")

    lo_pos, hi_pos = (total + 1) // 2, total // 2 + 1
    cum = 0
    lo_val = hi_val = None
    for l in lengths:
        cum += M.counts[l]
        if lo_val is None and cum >= lo_pos:
            lo_val = l
        if cum >= hi_pos:
            hi_val = l
            break
    median = (lo_val + hi_val) / 2

    top = max(M.counts.values())
    modes = [l for l in lengths if M.counts[l] == top]

    if lengths[0] == 0:
        harmonic = float("nan") if total == M.counts[0] else 0.0
        geometric = 0.0
    else:
        harmonic = total / math.fsum(c / l for l, c in M.counts.items())
        geometric = math.exp(math.fsum(c * math.log(l) for l, c in M.counts.items()) / total)

    return EmpiricalStats(
        mean=float(mean),
        variance=float(var),
        stdev=stdev,
        skewness=skew,
        median=float(median),
        modes=modes,
        harmonic_mean=harmonic,
        geometric_mean=geometric,
        min_length=lengths[0],
        max_length=lengths[-1],
    )
