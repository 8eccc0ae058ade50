"""Multigraded Hilbert and Frobenius series of harmonic spaces."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from more_itertools import distinct_permutations
from sympy import Add, Mul, Poly as SympyPoly, symbols

from groups.groups import GroupSpec
from symfunc.partitions import Partition, hook_length_dimension
from symfunc.symfunc import T
from symfunc.sympoly import SymPolyR

HILBERT = 'hilbert'
FROBENIUS = 'frobenius'

MultiDegree = Tuple[int, ...]


def degree_key(d):
    "Total degree first, then larger leading coordinates first."
    return (sum(d), tuple(-x for x in d))


@dataclass
class GradedSeries:
    """Map from multidegree to a dimension (kind hilbert) or to a
    {partition: multiplicity} map of S_n-irreducibles (kind frobenius).

    Multidegrees missing from entries have a zero component.  When
    max_tdeg is set the series is only known up to that total degree.

    """
    kind: str
    group: GroupSpec
    r: int
    entries: Dict[MultiDegree, object] = field(default_factory=dict)
    policy: str = 'auto'
    max_tdeg: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (HILBERT, FROBENIUS):
            raise ValueError(f'unknown series kind {self.kind!r}')
        for d in self.entries:
            if len(d) != self.r:
                raise ValueError(f'multidegree {d} in a series with {self.r} sets')


    def multidegrees(self) -> List[MultiDegree]:
        return sorted(self.entries, key=degree_key)


    def dimension(self, d) -> int:
        entry = self.entries.get(tuple(d))
        if entry is None:
            return 0
        if self.kind == HILBERT:
            return entry
        return sum(hook_length_dimension(lam) * mult for lam, mult in entry.items())


    def multiplicity(self, d, lam) -> int:
        if self.kind != FROBENIUS:
            raise ValueError('multiplicities need a Frobenius series')
        return self.entries.get(tuple(d), {}).get(Partition(lam), 0)


    def total_dimension(self) -> int:
        return sum(self.dimension(d) for d in self.entries)


    def is_symmetric(self) -> bool:
        "True if every entry is invariant under permuting its multidegree."
        return all(self.entries.get(tuple(other)) == value
                   for d, value in self.entries.items()
                   for other in distinct_permutations(d))


    def restrict(self) -> GradedSeries:
        "Drop the last set of variables: keep multidegrees ending in 0."
        if self.r == 0:
            raise ValueError('cannot restrict a series with no sets of variables')
        entries = {d[:-1]: value for d, value in self.entries.items() if d[-1] == 0}
        return GradedSeries(self.kind, self.group, self.r - 1, entries, self.policy, self.max_tdeg)


    def to_hilbert(self) -> GradedSeries:
        if self.kind == HILBERT:
            return self
        entries = {d: self.dimension(d) for d in self.entries}
        return GradedSeries(HILBERT, self.group, self.r, {d: v for d, v in entries.items() if v},
                            self.policy, self.max_tdeg)


    def as_sympoly(self) -> SymPolyR:
        hilbert = self.to_hilbert()
        return SymPolyR.from_monomials(self.r, dict(hilbert.entries), self.max_tdeg)


    def multiplicity_polynomial(self, lam) -> SymPolyR:
        "The graded multiplicity of the irreducible lam as a symmetric polynomial."
        lam = Partition(lam)
        monomials = {d: self.multiplicity(d, lam) for d in self.entries}
        return SymPolyR.from_monomials(self.r, {d: v for d, v in monomials.items() if v}, self.max_tdeg)


    def poincare(self, t=T) -> SympyPoly:
        "All sets of variables merged into one: sum of dim * t**tdeg."
        coefficients = {}
        for d in self.entries:
            coefficients[sum(d)] = coefficients.get(sum(d), 0) + self.dimension(d)
        return SympyPoly.from_dict({(k,): v for k, v in coefficients.items() if v} or {(0,): 0},
                                   t, domain='QQ')


    def as_expr(self, variables=None):
        "sum of dim(d) q**d, in q1..qr unless other symbols are given."
        variables = variables or symbols(f'q1:{self.r + 1}')
        return Add(*[self.dimension(d) * Mul(*[v**k for v, k in zip(variables, d)])
                     for d in self.multidegrees()])
