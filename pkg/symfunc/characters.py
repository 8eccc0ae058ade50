"""Irreducible characters of the symmetric group, via the
Murnaghan-Nakayama rule on beta-sets (rim hook removal).

"""
from functools import lru_cache

from symfunc.partitions import Partition, PartitionError


class WeightMismatchError(PartitionError):
    pass


def sn_character(lam, mu) -> int:
    "The value of the irreducible character lam on the class of cycle type mu."
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise WeightMismatchError(f'{lam} and {mu} have different weights')
    return _character(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _character(lam, mu):
    if not mu:
        return 1
    hook, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [part + length - 1 - i for i, part in enumerate(lam)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - hook
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = sorted((target if x == b else x for x in beta), reverse=True)
        smaller = tuple(p for p in (x - (length - 1 - i) for i, x in enumerate(moved)) if p)
        total += (-1)**height * _character(smaller, rest)
    return total
