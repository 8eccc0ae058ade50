"""q-integers, q-factorials and q-multinomial coefficients, as sympy
polynomials in t over QQ.

"""
from functools import lru_cache

from sympy import Poly

from symfunc.partitions import Partition, PartitionError
from symfunc.symfunc import T


@lru_cache(maxsize=None)
def q_integer(k, t=T):
    "[k]_t = 1 + t + ... + t**(k-1)."
    return Poly([1] * k if k else [0], t, domain='QQ')


@lru_cache(maxsize=None)
def q_factorial(n, t=T):
    result = Poly(1, t, domain='QQ')
    for k in range(1, n + 1):
        result = result * q_integer(k, t)
    return result


def qbinomial(n, lam, t=T):
    """The q-multinomial n!_t / (lam_1!_t ... lam_k!_t)."""
    lam = Partition(lam)
    if lam.weight != n:
        raise PartitionError(f'{lam} is not a partition of {n}')
    denominator = Poly(1, t, domain='QQ')
    for part in lam:
        denominator = denominator * q_factorial(part, t)
    return q_factorial(n, t).exquo(denominator)
