"""Symmetric polynomials in finitely many variables q_1..q_r.

SymPolyR keeps one coefficient per sorted exponent vector, i.e. it is
stored in the monomial symmetric basis m_lam(q_1..q_r).  Products and
plethysm expand to full monomials, which is affordable for the small r
used here.

"""
from __future__ import annotations

from typing import Dict, Iterable, Optional, Tuple

from more_itertools import distinct_permutations
from sympy import Add, Mul, symbols
from sympy.polys.domains import QQ

from symfunc.partitions import Partition, graded_key, partitions_of
from symfunc.symfunc import SymFunc, TruncationError, change_basis


class NotSymmetricError(ValueError):
    pass


Monomials = Dict[Tuple[int, ...], object]


def _truncated(terms: Dict, bound):
    if bound is None:
        return terms
    return {key: value for key, value in terms.items() if sum(key) <= bound}


class SymPolyR:
    __slots__ = ('r', 'coefficients', 'degree_bound')

    def __init__(self, r: int, coefficients: Optional[Dict] = None, degree_bound: Optional[int] = None):
        self.r = r
        self.degree_bound = degree_bound
        self.coefficients = {}
        for parts, coeff in (coefficients or {}).items():
            lam = Partition(parts)
            if len(lam) > r:
                raise NotSymmetricError(f'{lam} has more than {r} parts')
            coeff = QQ.convert(coeff)
            if coeff and (degree_bound is None or lam.weight <= degree_bound):
                self.coefficients[lam] = coeff


    @staticmethod
    def from_monomials(r: int, monomials: Monomials, degree_bound=None) -> SymPolyR:
        """Collapse a full monomial expansion, checking that every
        permutation of each exponent vector carries the same coefficient.

        """
        grouped = {}
        for exponents, coeff in monomials.items():
            if len(exponents) != r:
                raise ValueError(f'exponent vector {exponents} is not of length {r}')
            coeff = QQ.convert(coeff)
            if coeff:
                grouped.setdefault(Partition.from_exponents(exponents), {})[tuple(exponents)] = coeff
        coefficients = {}
        for lam, members in grouped.items():
            orbit = list(distinct_permutations(lam.padded(r)))
            values = set(members.values())
            if len(members) != len(orbit) or len(values) != 1:
                raise NotSymmetricError(f'coefficients over the permutations of {lam.padded(r)} differ')
            coefficients[lam] = values.pop()
        return SymPolyR(r, coefficients, degree_bound)


    def monomials(self) -> Monomials:
        result = {}
        for lam, coeff in self.coefficients.items():
            for exponents in distinct_permutations(lam.padded(self.r)):
                result[tuple(exponents)] = coeff
        return result


    def items(self):
        return sorted(self.coefficients.items(), key=lambda item: graded_key(item[0]))


    def coefficient(self, exponents: Iterable[int]):
        return self.coefficients.get(Partition.from_exponents(exponents), QQ.zero)


    def at_ones(self):
        "Value at q_1 = ... = q_r = 1."
        return sum((coeff * len(list(distinct_permutations(lam.padded(self.r))))
                    for lam, coeff in self.coefficients.items()), QQ.zero)


    def __add__(self, other):
        if not isinstance(other, SymPolyR):
            other = SymPolyR(self.r, {(): other})
        if other.r != self.r:
            raise ValueError(f'cannot add polynomials in {self.r} and {other.r} variables')
        bound = _min_bound(self.degree_bound, other.degree_bound)
        terms = dict(self.coefficients)
        for lam, coeff in other.coefficients.items():
            terms[lam] = terms.get(lam, QQ.zero) + coeff
        return SymPolyR(self.r, _truncated(terms, bound), bound)

    __radd__ = __add__


    def __neg__(self):
        return SymPolyR(self.r, {lam: -c for lam, c in self.coefficients.items()}, self.degree_bound)


    def __sub__(self, other):
        return self + (-other)


    def __mul__(self, other):
        if not isinstance(other, SymPolyR):
            value = QQ.convert(other)
            return SymPolyR(self.r, {lam: c * value for lam, c in self.coefficients.items()},
                            self.degree_bound)
        if other.r != self.r:
            raise ValueError(f'cannot multiply polynomials in {self.r} and {other.r} variables')
        bound = _min_bound(self.degree_bound, other.degree_bound)
        product = multiply_monomials(self.monomials(), other.monomials(), bound)
        return SymPolyR.from_monomials(self.r, product, bound)

    __rmul__ = __mul__


    def __eq__(self, other):
        if isinstance(other, SymPolyR):
            return self.r == other.r and self.coefficients == other.coefficients
        return NotImplemented

    __hash__ = None


    def as_expr(self, variables=None):
        "A sympy expression in q_1..q_r (or the given symbols)."
        variables = variables or symbols(f'q1:{self.r + 1}')
        terms = []
        for exponents, coeff in sorted(self.monomials().items(), key=lambda item: (sum(item[0]), item[0])):
            terms.append(coeff_to_sympy(coeff) * Mul(*[v**k for v, k in zip(variables, exponents)]))
        return Add(*terms)


    def __repr__(self):
        return f'SymPolyR(r={self.r}, {self.as_expr()})'


def coeff_to_sympy(coeff):
    return QQ.to_sympy(QQ.convert(coeff))


def _min_bound(a, b):
    bounds = [x for x in (a, b) if x is not None]
    return min(bounds) if bounds else None


def multiply_monomials(a: Monomials, b: Monomials, bound=None) -> Monomials:
    result = {}
    for x, cx in a.items():
        for y, cy in b.items():
            key = tuple(i + j for i, j in zip(x, y))
            if bound is not None and sum(key) > bound:
                continue
            total = result.get(key, QQ.zero) + cx * cy
            if total:
                result[key] = total
            else:
                del result[key]
    return result


def complete_series_poly(r: int, bound: int) -> SymPolyR:
    """H(q_1..q_r) = prod 1/(1 - q_i), truncated: all monomials of
    total degree at most bound.

    """
    if bound is None or bound < 1:
        raise TruncationError('the complete series needs a positive truncation degree')
    return SymPolyR(r, {lam: 1 for d in range(bound + 1) for lam in partitions_of(d, max_parts=r)}, bound)


def schur_polynomial(lam, r: int) -> SymPolyR:
    "s_lam(q_1..q_r); zero when lam has more than r parts."
    lam = Partition(lam)
    if len(lam) > r:
        return SymPolyR(r)
    in_m = change_basis(SymFunc('s', {lam: 1}), 'm')
    return SymPolyR(r, {mu: c for mu, c in in_m.terms.items() if len(mu) <= r})


def schur_expand(poly: SymPolyR) -> SymFunc:
    """Expand a symmetric polynomial in Schur polynomials s_mu(q_1..q_r).

    Repeatedly subtracts c * s_lam for the lexicographically largest
    remaining monomial lam, whose coefficient is exactly c by
    unitriangularity of Kostka numbers.

    """
    remaining = dict(poly.coefficients)
    result = {}
    while remaining:
        lam = max(remaining, key=lambda parts: (sum(parts), tuple(parts)))
        coeff = remaining[lam]
        result[lam] = coeff
        for mu, kostka in schur_polynomial(lam, poly.r).coefficients.items():
            value = remaining.get(mu, QQ.zero) - coeff * kostka
            if value:
                remaining[mu] = value
            else:
                remaining.pop(mu, None)
    return SymFunc('s', result, poly.degree_bound)


def evaluate_schur_expansion(f: SymFunc, r: int) -> SymPolyR:
    "The symmetric function f restricted to r variables."
    in_m = change_basis(f, 'm')
    return SymPolyR(r, {mu: c for mu, c in in_m.terms.items() if len(mu) <= r}, f.degree_bound)
