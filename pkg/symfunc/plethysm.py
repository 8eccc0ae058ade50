"""Plethystic substitution F[g].

F is expanded in power sums, and the rules are applied there:
p_k[c] = c for rational constants, p_k[p_j] = p_{kj}, and p_k acts
additively and multiplicatively on g.  On a polynomial alphabet
p_k[g] replaces every q_i by q_i**k.

"""
from typing import Optional, Union

from sympy.polys.domains import QQ

from symfunc.partitions import Partition
from symfunc.sympoly import SymPolyR, multiply_monomials
from symfunc.symfunc import SymFunc, TruncationError, change_basis, _multiply_p


def _effective_bound(g, truncation):
    bound = g.degree_bound
    if truncation is not None:
        if bound is not None and truncation > bound:
            raise TruncationError(f'argument known to degree {bound}, cannot plethysm to {truncation}')
        bound = truncation
    if bound is not None and bound < 1:
        raise TruncationError('plethysm needs a positive truncation degree')
    return bound


def _power_of_symfunc(g_p, k, bound):
    return {Partition(part * k for part in mu): c
            for mu, c in g_p.items()
            if bound is None or k * mu.weight <= bound}


def _power_of_poly(monomials, k, bound):
    return {tuple(k * a for a in exponents): c
            for exponents, c in monomials.items()
            if bound is None or k * sum(exponents) <= bound}


def plethysm(F: SymFunc, g: Union[SymFunc, SymPolyR], truncation: Optional[int] = None):
    bound = _effective_bound(g, truncation)
    F_p = change_basis(F, 'p').terms
    if isinstance(g, SymFunc):
        g_p = change_basis(g, 'p').terms
        power = lambda k: _power_of_symfunc(g_p, k, bound)
        multiply = lambda a, b: _multiply_p(a, b, bound)
        one = {Partition(): QQ.one}
    else:
        g_m = g.monomials()
        power = lambda k: _power_of_poly(g_m, k, bound)
        multiply = lambda a, b: multiply_monomials(a, b, bound)
        one = {(0,) * g.r: QQ.one}

    powers = {}
    result = {}
    for mu, coeff in F_p.items():
        term = one
        for part in mu:
            if part not in powers:
                powers[part] = power(part)
            term = multiply(term, powers[part])
        for key, value in term.items():
            total = result.get(key, QQ.zero) + coeff * value
            if total:
                result[key] = total
            else:
                result.pop(key, None)

    if isinstance(g, SymFunc):
        return change_basis(SymFunc('p', result, bound), g.basis)
    return SymPolyR.from_monomials(g.r, result, bound)
