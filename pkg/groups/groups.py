"""The imprimitive reflection groups G(m,p,n) as monomial matrices.

An element w is a permutation pi of the n coordinates together with
exponents e in (Z/m)^n whose sum is divisible by p.  As a matrix,
column j of w has the single entry zeta_m**e_j in row pi(j).  The
group acts on polynomials in X by f(X) -> f(X w), so the j-th column
of X w is zeta_m**e_j times column pi(j) of X.

"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import List, Tuple

from sympy import Poly as SympyPoly

from exact_arith.cyclo import CycloNum, CyclotomicOrderError
from harmonics.poly import ExponentMatrix, Poly
from symfunc.partitions import Partition, partitions_of
from symfunc.qanalog import q_integer
from symfunc.symfunc import T

logger = logging.getLogger('groups.groups')

DEFAULT_MAX_ORDER = 10000


class GroupSpecError(ValueError):
    pass


class GroupTooLargeError(ValueError):
    def __init__(self, message, order=None):
        super().__init__(message)
        self.order = order


@dataclass(frozen=True, order=True)
class GroupSpec:
    m: int
    p: int
    n: int

    def __post_init__(self):
        if min(self.m, self.p, self.n) < 1:
            raise GroupSpecError(f'G({self.m},{self.p},{self.n}): parameters must be positive')
        if self.m % self.p:
            raise GroupSpecError(f'G({self.m},{self.p},{self.n}): p must divide m')


    @property
    def order(self) -> int:
        return self.m**self.n * factorial(self.n) // self.p


    @property
    def family(self) -> str:
        """One of symmetric, cyclic, full (G(m,1,n)), dihedral or general."""
        if self.m == 1:
            return 'symmetric'
        if self.n == 1 and self.p == 1:
            return 'cyclic'
        if self.p == 1:
            return 'full'
        if self.n == 2 and self.p == self.m:
            return 'dihedral'
        return 'general'


    @property
    def canonical_name(self) -> str:
        return f'G({self.m},{self.p},{self.n})'


    @property
    def alias(self) -> str:
        "The conventional short name, or the canonical one."
        if self.m == 1:
            return f'S{self.n}'
        if self.n == 1 and self.p == 1:
            return f'C{self.m}'
        if self.m == 2 and self.p == 1:
            return f'B{self.n}'
        if self.n == 2 and self.p == self.m and self.m >= 3:
            return f'I2({self.m})'
        if self.m == 2 and self.p == 2 and self.n >= 4:
            return f'D{self.n}'
        return self.canonical_name


    def degrees(self) -> Tuple[int, ...]:
        return degrees(self)


    def __str__(self):
        return self.alias


_NAME_PATTERNS = [
    (re.compile(r'^S(\d+)$'), lambda k: (1, 1, k)),
    (re.compile(r'^B(\d+)$'), lambda k: (2, 1, k)),
    (re.compile(r'^C(\d+)$'), lambda k: (k, 1, 1)),
    (re.compile(r'^D(\d+)$'), lambda k: (2, 2, k)),
    (re.compile(r'^I2\((\d+)\)$'), lambda k: (k, k, 2)),
]

_LITERAL = re.compile(r'^G\((\d+),(\d+),(\d+)\)$')


def parse_group(text: str) -> GroupSpec:
    """Parse S4, B3, C6, D4, I2(5) or the literal G(m,p,n).

    Case and whitespace are ignored.

    """
    name = re.sub(r'\s+', '', text or '').upper()
    match = _LITERAL.match(name)
    if match:
        return GroupSpec(*(int(x) for x in match.groups()))
    for pattern, parameters in _NAME_PATTERNS:
        match = pattern.match(name)
        if match:
            return GroupSpec(*parameters(int(match.group(1))))
    raise GroupSpecError(f'cannot parse group name {text!r}')


def degrees(g: GroupSpec) -> Tuple[int, ...]:
    """The degrees of the basic invariants, sorted.

    G(m,p,n) has degrees m, 2m, ..., (n-1)m and nm/p.  S_n acts on all n
    coordinates, so it has degree 1.

    """
    return tuple(sorted([g.m * k for k in range(1, g.n)] + [g.n * g.m // g.p]))


def degree_bound(g: GroupSpec) -> int:
    "sum(d_i - 1), the degree of the Jacobian."
    return sum(d - 1 for d in degrees(g))


def poincare_polynomial(g: GroupSpec, t=T) -> SympyPoly:
    "prod (1 - t**d_i) / (1 - t), over QQ."
    result = SympyPoly(1, t, domain='QQ')
    for d in degrees(g):
        result = result * q_integer(d, t)
    return result


@lru_cache(maxsize=None)
def _root(m: int, power: int) -> CycloNum:
    return CycloNum.zeta(m, power)


@dataclass(frozen=True)
class GroupElement:
    perm: Tuple[int, ...]
    exps: Tuple[int, ...]
    m: int = 1

    @staticmethod
    def identity(n: int, m: int = 1) -> GroupElement:
        return GroupElement(tuple(range(n)), (0,) * n, m)


    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and not any(self.exps)


    def compose(self, other: GroupElement) -> GroupElement:
        "The matrix product self * other."
        if (self.m, len(self.perm)) != (other.m, len(other.perm)):
            raise GroupSpecError('composing elements of different groups')
        perm = tuple(self.perm[other.perm[j]] for j in range(len(self.perm)))
        exps = tuple((self.exps[other.perm[j]] + other.exps[j]) % self.m for j in range(len(self.perm)))
        return GroupElement(perm, exps, self.m)


    def inverse(self) -> GroupElement:
        n = len(self.perm)
        perm = [0] * n
        exps = [0] * n
        for j in range(n):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = (-self.exps[j]) % self.m
        return GroupElement(tuple(perm), tuple(exps), self.m)


    def cycle_type(self) -> Partition:
        seen = set()
        lengths = []
        for start in range(len(self.perm)):
            length = 0
            j = start
            while j not in seen:
                seen.add(j)
                j = self.perm[j]
                length += 1
            if length:
                lengths.append(length)
        return Partition(sorted(lengths, reverse=True))


    def act_on_monomial(self, A: ExponentMatrix) -> Tuple[int, ExponentMatrix]:
        """(k, B) with X^A evaluated at X w equal to zeta_m**k X^B.

        Column j of A moves to column pi(j) of B.

        """
        n = len(self.perm)
        columns = [None] * n
        power = 0
        for j in range(n):
            column = A.column(j)
            columns[self.perm[j]] = column
            power += self.exps[j] * sum(column)
        return power % self.m, ExponentMatrix.from_columns(columns)


def act(w: GroupElement, f: Poly) -> Poly:
    """f(X) -> f(X w).

    Rational polynomials are lifted to Q(zeta_m); any other order
    mismatch is an error.

    """
    if f.n != len(w.perm):
        raise GroupSpecError(f'element of rank {len(w.perm)} acting on {f.n} coordinates')
    if f.order != w.m:
        if not f.is_rational():
            raise CyclotomicOrderError(f'polynomial over Q(zeta_{f.order}) acted on by G({w.m},.,.)')
        f = f.with_order(w.m)
    terms = {}
    for A, coeff in f.terms.items():
        power, B = w.act_on_monomial(A)
        terms[B] = coeff * _root(w.m, power) if power else coeff
    return Poly(f.r, f.n, terms, w.m)


@lru_cache(maxsize=32)
def _elements(g: GroupSpec) -> Tuple[GroupElement, ...]:
    elements = []
    for perm in permutations(range(g.n)):
        for exps in product(range(g.m), repeat=g.n):
            if sum(exps) % g.p == 0:
                elements.append(GroupElement(perm, exps, g.m))
    logger.debug('enumerated %d elements of %s', len(elements), g)
    return tuple(elements)


def enumerate_elements(g: GroupSpec, cap: int = DEFAULT_MAX_ORDER) -> List[GroupElement]:
    "All |W| elements, identity first."
    if g.order > cap:
        raise GroupTooLargeError(f'{g} has order {g.order}, above the cap of {cap}', g.order)
    return list(_elements(g))


def conjugacy_representative(mu) -> GroupElement:
    """A permutation of cycle type mu, cycles on consecutive coordinates."""
    mu = Partition(mu)
    perm = []
    start = 0
    for length in mu:
        perm.extend(start + (k + 1) % length for k in range(length))
        start += length
    return GroupElement(tuple(perm), (0,) * mu.weight, 1)


def conjugacy_representatives(n: int) -> List[Tuple[Partition, GroupElement]]:
    "One element of S_n per cycle type, in reverse-lexicographic order of types."
    return [(mu, conjugacy_representative(mu)) for mu in partitions_of(n)]
