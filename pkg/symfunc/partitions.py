"""Integer partitions as value types.

Partitions are tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Within one weight they are
listed in reverse-lexicographic order, e.g. (4), (3,1), (2,2).

"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, List, Optional


class PartitionError(ValueError):
    pass


class Partition(tuple):
    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise PartitionError(f'parts must be positive integers: {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f'parts must be weakly decreasing: {parts}')
        return super().__new__(cls, parts)


    @staticmethod
    def from_exponents(exponents: Iterable[int]) -> Partition:
        "The sorted, zero-free form of an exponent vector."
        return Partition(sorted((e for e in exponents if e), reverse=True))


    @property
    def weight(self):
        return sum(self)


    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for part in self if part > j) for j in range(self[0]))


    def padded(self, length):
        if len(self) > length:
            raise PartitionError(f'{self} has more than {length} parts')
        return tuple(self) + (0,) * (length - len(self))


    def __repr__(self):
        return f'Partition({tuple(self)})'


    def __str__(self):
        return '[' + ','.join(str(p) for p in self) + ']'


def graded_key(partition):
    "Sort key: by weight, then reverse-lexicographically."
    return (sum(partition), tuple(-p for p in partition))


def partitions_of(d: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """All partitions of d with at most max_parts parts, none larger
    than max_part, in reverse-lexicographic order.

    """
    if d < 0:
        return []
    return [Partition(p) for p in _partitions(d, d if max_part is None else max_part,
                                              d if max_parts is None else max_parts)]


@lru_cache(maxsize=None)
def _partitions(d, largest, slots):
    if d == 0:
        return ((),)
    if slots == 0:
        return ()
    result = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first, slots - 1):
            result.append((first,) + rest)
    return tuple(result)


def partitions_up_to(bound: int, max_parts: Optional[int] = None) -> List[Partition]:
    "All partitions of weight 0..bound, graded then reverse-lexicographic."
    return [p for d in range(bound + 1) for p in partitions_of(d, max_parts)]


def dominates(lam, mu):
    "True if lam >= mu in dominance order; weights must agree."
    if sum(lam) != sum(mu):
        raise PartitionError(f'{lam} and {mu} have different weights')
    lam_sum = mu_sum = 0
    for k in range(max(len(lam), len(mu))):
        lam_sum += lam[k] if k < len(lam) else 0
        mu_sum += mu[k] if k < len(mu) else 0
        if lam_sum < mu_sum:
            return False
    return True


def z_value(mu) -> int:
    "The centralizer order z_mu = prod_i i**m_i * m_i!."
    return prod(part**count * factorial(count) for part, count in Counter(mu).items())


def class_size(mu) -> int:
    "Number of permutations of cycle type mu."
    return factorial(sum(mu)) // z_value(mu)


def hook_lengths(lam):
    conjugate = Partition(lam).conjugate()
    return [lam[i] - j + conjugate[j] - i - 1
            for i in range(len(lam))
            for j in range(lam[i])]


def hook_length_dimension(lam) -> int:
    "Dimension f^lam of the irreducible S_n representation lam."
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def contents(lam):
    return [j - i for i in range(len(lam)) for j in range(lam[i])]
