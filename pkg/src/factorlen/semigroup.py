"""Numerical semigroups given by an explicit generator list.

A numerical semigroup is the set of nonnegative integer combinations of
generators n1 < n2 < ... < nk.  We require gcd(n1,...,nk) = 1 (finite
complement) and k >= 3, the regime in which the asymptotic length
statistics computed elsewhere in this package apply.  The generator list
need not be minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import GcdNotOne, NonPositive, TooFewGenerators


@dataclass(frozen=True)
class NumericalSemigroup:
    """Validated generator list with its two elementary invariants.

    period is lcm(n1,...,nk); delta is the gcd of consecutive generator
    differences, the common gap between factorization lengths of any
    fixed element.
    """

    generators: tuple[int, ...]
    period: int
    delta: int

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


def new_semigroup(generators) -> NumericalSemigroup:
    """Validate, sort and deduplicate a generator list.

    Raises NonPositive, TooFewGenerators or GcdNotOne when the list does
    not describe a numerical semigroup with at least three distinct
    generators and finite complement.
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise TooFewGenerators("generator list is empty")
    if gens[0] < 1:
        raise NonPositive(f"generators must be >= 1, got {gens[0]}")
    if len(gens) < 3:
        raise TooFewGenerators(f"need at least 3 distinct generators, got {len(gens)}")
    if gcd(*gens) != 1:
        raise GcdNotOne(f"gcd of generators is {gcd(*gens)}, must be 1")
    delta = gcd(*(b - a for a, b in zip(gens, gens[1:])))
    return NumericalSemigroup(tuple(gens), lcm(*gens), delta)


def contains(S: NumericalSemigroup, n: int) -> bool:
    """Membership test by boolean reachability over 0..n."""
    if n < 0:
        return False
    reachable = bytearray(n + 1)
    reachable[0] = 1
    for v in range(1, n + 1):
        for g in S.generators:
            if g > v:
                break
            if reachable[v - g]:
                reachable[v] = 1
                break
    return bool(reachable[n])


def delta_min(S: NumericalSemigroup) -> int:
    """Smallest possible gap between factorization lengths of one element."""
    return S.delta
