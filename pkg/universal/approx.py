"""Low-degree approximation of the S_n harmonics.

The diagonal coinvariant ring of S_n in r sets of variables is
approximated by h_n[w H(q)] divided by its invariant part h_n[H(q)],
where H = 1 + h_1 + h_2 + ... is the complete series of the
q-alphabet.  The m_lam(w) coefficient of the quotient is
h_lam[H]/h_n[H] and its S_lam(w) coefficient is s_lam[H]/h_n[H].  The
approximation agrees with the harmonics in low q-degree.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict

from sympy import expand, interpolate
from sympy.polys.domains import QQ

from harmonics.engine import ConsistencyError
from symfunc.partitions import Partition, graded_key, partitions_of
from symfunc.plethysm import plethysm
from symfunc.symfunc import SymFunc, TruncationError, change_basis, complete_series, h, s
from symfunc.sympoly import SymPolyR, coeff_to_sympy, evaluate_schur_expansion
from universal.reference import N

logger = logging.getLogger('universal.approx')


def invert_series(f: SymFunc, bound: int) -> SymFunc:
    """1/f up to total degree bound, degree by degree.  f must have
    constant term 1.

    """
    if f.coefficient(()) != 1:
        raise ValueError(f'cannot invert a series with constant term {f.coefficient(())}')
    parts = [f.homogeneous_part(k).truncate(bound) for k in range(bound + 1)]
    inverse = [SymFunc.one(f.basis, bound)]
    for k in range(1, bound + 1):
        term = SymFunc.zero(f.basis, bound)
        for j in range(1, k + 1):
            if parts[j]:
                term = term - parts[j] * inverse[k - j]
        inverse.append(term)
    return sum(inverse[1:], inverse[0])


@dataclass
class LowDegreeApproximation:
    n: int
    bound: int
    monomial_form: Dict[Partition, SymFunc] = field(default_factory=dict)
    schur_form: Dict[Partition, SymFunc] = field(default_factory=dict)

    def hilbert(self) -> SymFunc:
        "H^n / h_n[H], the m_{1^n} coefficient."
        return self.monomial_form[Partition((1,) * self.n)]


def low_degree_approx(n: int, bound: int) -> LowDegreeApproximation:
    if bound is None or bound < 1:
        raise TruncationError('the approximation needs a positive truncation degree')
    H = complete_series(bound)
    inverse = invert_series(plethysm(h(n), H), bound)
    approximation = LowDegreeApproximation(n, bound)
    for lam in partitions_of(n):
        approximation.monomial_form[lam] = plethysm(SymFunc.basis_element('h', lam), H) * inverse
        approximation.schur_form[lam] = change_basis(plethysm(s(*lam), H) * inverse, 's')
    logger.debug('low-degree approximation of S%d to degree %d', n, bound)
    return approximation


def low_degree_hilbert(n: int, bound: int) -> SymFunc:
    "H^n / h_n[H] without the rest of the approximation."
    if bound is None or bound < 1:
        raise TruncationError('the approximation needs a positive truncation degree')
    H = complete_series(bound)
    return H**n * invert_series(plethysm(h(n), H), bound)


def missing_terms(approximation: LowDegreeApproximation, table) -> Dict[Partition, SymFunc]:
    """Terms of an exact table (lam -> SymFunc) that the approximation
    does not produce, by row.  Rows that agree are left out.

    """
    result = {}
    for lam, row in table.items():
        difference = change_basis(row, 's') - SymFunc('s', approximation.schur_form[Partition(lam)].terms)
        if difference:
            result[Partition(lam)] = difference
    return result


def agrees_to_degree(approximation: LowDegreeApproximation, table, degree: int) -> bool:
    "True if every table row matches the approximation in q-degree <= degree."
    for lam, row in table.items():
        exact = SymFunc('s', change_basis(row, 's').terms, degree)
        if exact != SymFunc('s', approximation.schur_form[Partition(lam)].terms, degree):
            return False
    return True


def low_degree_hilbert_symbolic(bound: int, symbol=N) -> Dict[Partition, object]:
    """Coefficients of H^n / h_n[H] up to degree bound as polynomials in n.

    They are interpolated from n = bound .. 2*bound and checked at
    n = 2*bound + 1.

    """
    points = list(range(max(bound, 1), 2 * bound + 1))
    check = 2 * bound + 1
    tables = {n: low_degree_hilbert(n, bound) for n in points + [check]}
    keys = set()
    for f in tables.values():
        keys.update(f.terms)
    result = {}
    for mu in sorted(keys, key=graded_key):
        data = [(n, coeff_to_sympy(tables[n].coefficient(mu))) for n in points]
        polynomial = expand(interpolate(data, symbol))
        if polynomial.subs(symbol, check) != coeff_to_sympy(tables[check].coefficient(mu)):
            raise ConsistencyError(f'the h{mu} coefficient is not polynomial in n from n = {points[0]}')
        if polynomial != 0:
            result[mu] = polynomial
    return result


@dataclass
class CoinvariantSeries:
    """h_n[w H(q)] and h_n[H(q)] in r variables q, up to total degree
    bound, with the quotient of the first by the second.

    """
    n: int
    r: int
    bound: int
    frobenius: Dict[Partition, SymPolyR] = field(default_factory=dict)
    invariants: SymPolyR = None
    quotient: Dict[Partition, SymPolyR] = field(default_factory=dict)

    def dimensions(self) -> Dict[int, int]:
        "Dimension of the invariant ring by total degree."
        result = {}
        for exponents, coeff in self.invariants.monomials().items():
            result[sum(exponents)] = result.get(sum(exponents), 0) + int(QQ.convert(coeff).numerator)
        return dict(sorted(result.items()))


def coinvariant_ring_series(n: int, r: int, bound: int) -> CoinvariantSeries:
    if bound is None or bound < 1:
        raise TruncationError('the coinvariant series needs a positive truncation degree')
    H = complete_series(bound)
    approximation = low_degree_approx(n, bound)
    series = CoinvariantSeries(n, r, bound)
    series.invariants = evaluate_schur_expansion(plethysm(h(n), H), r)
    for lam in partitions_of(n):
        series.frobenius[lam] = evaluate_schur_expansion(plethysm(s(*lam), H), r)
        series.quotient[lam] = evaluate_schur_expansion(approximation.schur_form[lam], r)
    return series
