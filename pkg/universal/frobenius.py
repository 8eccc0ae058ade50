"""Universal multigraded Frobenius tables of S_n harmonics.

Row lam of the table is the Schur expansion, in the q-alphabet, of the
graded multiplicity of the irreducible S_lam(w); like the Hilbert
series it does not depend on the number of sets of variables.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from sympy import Poly as SympyPoly, expand
from sympy.polys.domains import QQ

from harmonics.series import FROBENIUS, GradedSeries
from symfunc.partitions import Partition, partitions_of
from symfunc.symfunc import SymFunc, change_basis, kostka, schur_at_ones
from symfunc.sympoly import coeff_to_sympy, schur_expand
from universal.extract import UniversalityError, integral_coefficient, first_difference
from universal.reference import R

logger = logging.getLogger('universal.frobenius')


@dataclass
class UniversalFrobenius:
    n: int
    table: Dict[Partition, Dict[Partition, int]] = field(default_factory=dict)
    certified: bool = False

    def row(self, lam) -> SymFunc:
        return SymFunc('s', self.table.get(Partition(lam), {}))


    def rows(self):
        "(lam, row) pairs for every lam of n, in reverse-lexicographic order."
        return [(lam, self.row(lam)) for lam in partitions_of(self.n)]


def universal_frobenius(n: int, series: GradedSeries, lower: Optional[GradedSeries] = None) -> UniversalFrobenius:
    """Schur-expand each multiplicity polynomial of a Frobenius series
    of S_n at r = n.  lower, the series at r = n - 1, certifies the
    table by restriction, multiplicities included.

    """
    if series.kind != FROBENIUS or series.group.m != 1 or series.group.n != n:
        raise ValueError(f'a Frobenius series of S{n} is required')
    if series.r != n:
        raise ValueError(f'the universal table of S{n} needs {n} sets of variables, not {series.r}')
    if series.max_tdeg is not None:
        raise ValueError(f'series is truncated at total degree {series.max_tdeg}')

    certified = False
    if lower is not None:
        restricted = series.restrict()
        d = first_difference(restricted, lower)
        if d is None:
            d = next((d for d in restricted.multidegrees() if restricted.entries[d] != lower.entries.get(d)),
                     None)
        if d is not None:
            raise UniversalityError(f'universality violated for S{n}: multiplicities differ at {d}', d)
        certified = True

    table = {}
    for lam in partitions_of(n):
        row = schur_expand(series.multiplicity_polynomial(lam))
        table[lam] = {mu: integral_coefficient(c, f'row {lam}, s{mu}') for mu, c in row.terms.items()}
        if any(c < 0 for c in table[lam].values()):
            raise UniversalityError(f'negative multiplicity coefficient in row {lam} of S{n}')
    if table[Partition((n,))] != {Partition(): 1}:
        raise UniversalityError(f'the trivial row of S{n} is {table[Partition((n,))]}, not 1')
    logger.info('universal Frobenius table of S%d (certified=%s)', n, certified)
    return UniversalFrobenius(n, table, certified)


def mh_form(u: UniversalFrobenius) -> Dict[Partition, SymFunc]:
    """Coefficient of each m_nu(w), in the h basis of the q-alphabet.

    S_lam(w) = sum_nu K_{lam,nu} m_nu(w), so the m_nu coefficient is
    sum_lam K_{lam,nu} row_lam.

    """
    result = {}
    for nu in partitions_of(u.n):
        total = SymFunc.zero('s')
        for lam, row in u.rows():
            k = kostka(lam, nu)
            if k:
                total = total + row * k
        result[nu] = change_basis(total, 'h')
    return result


def is_h_positive(f: SymFunc) -> bool:
    return all(c >= 0 for c in change_basis(f, 'h').terms.values())


def positivity_report(u: UniversalFrobenius) -> Dict[Partition, bool]:
    "Whether each m_nu(w) coefficient is h-positive."
    return {nu: is_h_positive(f) for nu, f in mh_form(u).items()}


def _row_at_ones(row: SymFunc, r):
    if isinstance(r, int):
        return sum((c * schur_at_ones(mu, r) for mu, c in row.terms.items()), QQ.zero)
    return sum(coeff_to_sympy(c) * schur_at_ones(mu, r) for mu, c in row.terms.items())


def catalan_check(u: UniversalFrobenius, r: int) -> int:
    "The alternating row at 1^r: Catalan numbers at r = 2, Tamari intervals at r = 3."
    return integral_coefficient(_row_at_ones(u.row((1,) * u.n), r), f'the alternating row at r = {r}')


def multiplicity_polynomials(u: UniversalFrobenius, r=R) -> Dict[Partition, object]:
    """Multiplicity of each S_lam(w) in all of the harmonics at 1^r: a
    number for an integer r, a polynomial in r over QQ for a Symbol.

    """
    if isinstance(r, int):
        return {lam: integral_coefficient(_row_at_ones(row, r), f'row {lam}') for lam, row in u.rows()}
    return {lam: SympyPoly(expand(_row_at_ones(row, r)), r, domain='QQ') for lam, row in u.rows()}
