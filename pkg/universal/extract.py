"""Universal Schur and h-expansions of Hilbert series.

The Hilbert series of the harmonics in r sets of variables is a
symmetric polynomial in q_1..q_r, and its Schur coefficients do not
depend on r.  Since every Schur function that occurs has at most n
parts, one computation at r = n determines all of them; the series at
r = n - 1 certifies the result by restriction.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from sympy import Poly as SympyPoly, expand
from sympy.polys.domains import QQ

from groups.groups import GroupSpec, poincare_polynomial
from harmonics.series import HILBERT, GradedSeries, degree_key
from symfunc.partitions import Partition
from symfunc.symfunc import SymFunc, change_basis, principal_specialization, schur_at_ones
from symfunc.sympoly import evaluate_schur_expansion, schur_expand
from universal.reference import R

logger = logging.getLogger('universal.extract')

# Families where a theorem guarantees nonnegative Schur coefficients.
POSITIVE_FAMILIES = ('symmetric', 'cyclic', 'full')


class UniversalityError(ValueError):
    def __init__(self, message, multidegree=None):
        super().__init__(message)
        self.multidegree = multidegree


def integral_coefficient(coeff, what):
    coeff = QQ.convert(coeff)
    if coeff.denominator != 1:
        raise UniversalityError(f'non-integral coefficient {coeff} of {what}')
    return int(coeff.numerator)


@dataclass
class UniversalExpansion:
    group: GroupSpec
    coefficients: Dict[Partition, int] = field(default_factory=dict)
    certified_rank: int = 0
    certified: bool = False

    def as_symfunc(self) -> SymFunc:
        return SymFunc('s', self.coefficients)


    def is_schur_positive(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())


    def evaluate(self, r: int):
        "The Hilbert series in r sets of variables, as a SymPolyR."
        return evaluate_schur_expansion(self.as_symfunc(), r)


    def one_variable(self) -> SympyPoly:
        return principal_specialization(self.as_symfunc())


def first_difference(a: GradedSeries, b: GradedSeries) -> Optional[tuple]:
    "The smallest multidegree where two Hilbert series disagree, or None."
    left = a.to_hilbert().entries
    right = b.to_hilbert().entries
    for d in sorted(set(left) | set(right), key=degree_key):
        if left.get(d, 0) != right.get(d, 0):
            return d
    return None


def certify_restriction(series: GradedSeries, lower: GradedSeries):
    """Raise UniversalityError unless dropping the last set of variables
    from series gives lower.

    """
    if lower.r != series.r - 1:
        raise ValueError(f'expected a series in {series.r - 1} sets, got {lower.r}')
    d = first_difference(series.restrict(), lower)
    if d is not None:
        raise UniversalityError(f'universality violated for {series.group}: restriction to '
                                f'{lower.r} sets differs at multidegree {d}', d)


def extract_universal(g: GroupSpec, series: GradedSeries, lower: Optional[GradedSeries] = None,
                      assert_positive: Optional[bool] = None) -> UniversalExpansion:
    """Schur coefficients c_mu of the Hilbert series of g.

    series must be complete and have r = n.  When lower (the series at
    r = n - 1) is given the expansion is certified by restriction; for
    n = 1 the trivial series in no variables is used.  Nonnegativity
    is asserted for the families in POSITIVE_FAMILIES unless
    assert_positive says otherwise.

    """
    if series.r != g.n:
        raise ValueError(f'extraction for {g} needs {g.n} sets of variables, not {series.r}')
    if series.max_tdeg is not None:
        raise ValueError(f'series for {g} is truncated at total degree {series.max_tdeg}')
    if lower is None and g.n == 1:
        lower = GradedSeries(HILBERT, g, 0, {(): 1})
    if lower is not None:
        certify_restriction(series, lower)

    expansion = schur_expand(series.as_sympoly())
    coefficients = {mu: integral_coefficient(c, f's{mu}') for mu, c in expansion.terms.items()}
    u = UniversalExpansion(g, coefficients, series.r, lower is not None)

    if assert_positive is None:
        assert_positive = g.family in POSITIVE_FAMILIES
    if not u.is_schur_positive():
        negative = sorted(mu for mu, c in coefficients.items() if c < 0)
        if assert_positive:
            raise UniversalityError(f'negative Schur coefficients for {g}: {negative}')
        logger.warning('%s has negative Schur coefficients at %s', g, negative)
    if u.one_variable() != poincare_polynomial(g):
        raise UniversalityError(f'one-variable specialization of {g} is not its Poincare polynomial')
    logger.info('extracted %d Schur terms for %s (certified=%s)', len(coefficients), g, u.certified)
    return u


def h_expansion(u: UniversalExpansion) -> Dict[Partition, int]:
    "Coefficients a_mu with sum a_mu h_mu = sum c_mu s_mu; may be negative."
    in_h = change_basis(u.as_symfunc(), 'h')
    return {mu: integral_coefficient(c, f'h{mu}') for mu, c in in_h.terms.items()}


def dimension_polynomial(u: UniversalExpansion, r=R):
    """Total dimension in r sets of variables.

    An integer r gives a number.  A sympy Symbol gives a polynomial in
    that symbol over QQ.

    """
    if isinstance(r, int):
        value = sum((c * schur_at_ones(mu, r) for mu, c in u.coefficients.items()), QQ.zero)
        return integral_coefficient(value, f'the dimension at r = {r}')
    total = expand(sum(c * schur_at_ones(mu, r) for mu, c in u.coefficients.items()))
    return SympyPoly(total, r, domain='QQ')
