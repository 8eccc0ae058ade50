"""Symmetric functions in the classical bases m, e, h, p and s.

A SymFunc is a finite sum of basis elements indexed by partitions,
with rational coefficients, optionally truncated at a total degree.
Every conversion is routed through the power-sum basis p.  Transition
data is computed once per weight and cached.

"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterable, Optional

from sympy import Poly, Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from symfunc.characters import sn_character
from symfunc.partitions import (Partition, PartitionError, contents, graded_key, hook_lengths,
                                partitions_of, z_value)

logger = logging.getLogger('symfunc.symfunc')

BASES = ('m', 'e', 'h', 'p', 's')
MULTIPLICATIVE_BASES = ('e', 'h', 'p')

T = Symbol('t')


class BasisError(ValueError):
    pass


class TruncationError(ValueError):
    pass


def _check_basis(basis):
    if basis not in BASES:
        raise BasisError(f'unknown basis {basis!r}; expected one of {", ".join(BASES)}')


def combine_bounds(a: Optional[int], b: Optional[int]) -> Optional[int]:
    "Truncation of a result built from series truncated at a and b."
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise TruncationError(f'cannot mix series truncated at degree {a} and {b}')


def _add_into(target: Dict, source: Dict, scale=QQ.one, bound=None):
    for key, value in source.items():
        if bound is not None and sum(key) > bound:
            continue
        total = target.get(key, QQ.zero) + scale * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)


def _multiply_p(a: Dict, b: Dict, bound=None) -> Dict:
    result = {}
    for lam, x in a.items():
        for mu, y in b.items():
            if bound is not None and sum(lam) + sum(mu) > bound:
                continue
            key = Partition(sorted(lam + mu, reverse=True))
            total = result.get(key, QQ.zero) + x * y
            if total:
                result[key] = total
            else:
                del result[key]
    return result


#
# Transitions into p.
#

@lru_cache(maxsize=None)
def _h_single(n):
    return {mu: QQ(1, z_value(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def _e_single(n):
    return {mu: QQ((-1)**(n - len(mu)), z_value(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def _product_row(basis, lam):
    single = _h_single if basis == 'h' else _e_single
    row = {Partition(): QQ.one}
    for part in lam:
        row = _multiply_p(row, single(part))
    return row


@lru_cache(maxsize=None)
def _s_row(lam):
    n = sum(lam)
    row = {}
    for mu in partitions_of(n):
        chi = sn_character(lam, mu)
        if chi:
            row[mu] = QQ(chi, z_value(mu))
    return row


@lru_cache(maxsize=None)
def p_to_m_row(mu):
    """The monomial expansion of p_mu: the coefficient of m_lam counts
    assignments of the parts of mu to rows whose sums give lam.

    """
    result = {}
    for lam in partitions_of(sum(mu), max_parts=len(mu)):
        count = _count_assignments(tuple(mu), tuple(lam))
        if count:
            result[lam] = QQ(count)
    return result


@lru_cache(maxsize=None)
def _count_assignments(parts, remaining):
    if not parts:
        return 1 if not any(remaining) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for i, room in enumerate(remaining):
        if room >= first:
            total += _count_assignments(rest, remaining[:i] + (room - first,) + remaining[i + 1:])
    return total


@lru_cache(maxsize=None)
def _m_rows(n):
    "Rows of m_lam in p, by inverting the p -> m transition for weight n."
    return _invert_rows(n, p_to_m_row)


def _to_p_row(basis, lam):
    if basis == 'p':
        return {lam: QQ.one}
    if basis in ('h', 'e'):
        return _product_row(basis, lam)
    if basis == 's':
        return _s_row(lam)
    return _m_rows(sum(lam))[lam]


#
# Transitions out of p.
#

def _invert_rows(n, row_function):
    """Given row_function(lam) = expansion of basis element lam in a
    second basis, return the inverse transition for weight n.

    """
    index = partitions_of(n)
    position = {lam: i for i, lam in enumerate(index)}
    dok = {}
    for i, lam in enumerate(index):
        for mu, value in row_function(lam).items():
            dok[(i, position[mu])] = value
    matrix = DomainMatrix.from_dok(dok, (len(index), len(index)), QQ).to_dense()
    inverse = matrix.inv().to_dok()
    rows = {lam: {} for lam in index}
    for (i, j), value in inverse.items():
        rows[index[i]][index[j]] = value
    return rows


@lru_cache(maxsize=None)
def _p_in_h(n):
    return _invert_rows(n, lambda lam: _product_row('h', lam))


@lru_cache(maxsize=None)
def _p_in_e(n):
    return _invert_rows(n, lambda lam: _product_row('e', lam))


@lru_cache(maxsize=None)
def _p_in_s_row(mu):
    row = {}
    for lam in partitions_of(sum(mu)):
        chi = sn_character(lam, mu)
        if chi:
            row[lam] = QQ(chi)
    return row


def _from_p_row(basis, mu):
    if basis == 'p':
        return {mu: QQ.one}
    if basis == 'm':
        return p_to_m_row(mu)
    if basis == 's':
        return _p_in_s_row(mu)
    if basis == 'h':
        return _p_in_h(sum(mu))[mu]
    return _p_in_e(sum(mu))[mu]


class SymFunc:
    """A symmetric function sum(c_lam * b_lam) in basis b.

    terms never holds zero coefficients.  When degree_bound is set the
    value is a series known only up to that total degree, and no term
    of higher weight is kept.

    """
    __slots__ = ('basis', 'terms', 'degree_bound')

    def __init__(self, basis: str, terms: Optional[Dict] = None, degree_bound: Optional[int] = None):
        _check_basis(basis)
        self.basis = basis
        self.degree_bound = degree_bound
        self.terms = {}
        for parts, coeff in (terms or {}).items():
            lam = Partition(parts)
            if degree_bound is not None and lam.weight > degree_bound:
                continue
            coeff = QQ.convert(coeff)
            if coeff:
                self.terms[lam] = self.terms.get(lam, QQ.zero) + coeff
        self.terms = {lam: c for lam, c in self.terms.items() if c}


    @staticmethod
    def basis_element(basis, parts=(), coeff=1, degree_bound=None):
        return SymFunc(basis, {Partition(parts): coeff}, degree_bound)


    @staticmethod
    def zero(basis='s', degree_bound=None):
        return SymFunc(basis, {}, degree_bound)


    @staticmethod
    def one(basis='s', degree_bound=None):
        return SymFunc(basis, {(): 1}, degree_bound)


    def items(self):
        "Terms in graded reverse-lexicographic order."
        return sorted(self.terms.items(), key=lambda item: graded_key(item[0]))


    def coefficient(self, parts):
        return self.terms.get(Partition(parts), QQ.zero)


    def degree(self):
        return max((lam.weight for lam in self.terms), default=-1)


    def homogeneous_part(self, weight):
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if lam.weight == weight},
                       self.degree_bound)


    def truncate(self, bound):
        if self.degree_bound is not None and bound > self.degree_bound:
            raise TruncationError(f'series known to degree {self.degree_bound}, not {bound}')
        return SymFunc(self.basis, self.terms, bound)


    def to(self, basis):
        return change_basis(self, basis)


    def _coerce(self, other):
        if isinstance(other, SymFunc):
            bound = combine_bounds(self.degree_bound, other.degree_bound)
            return change_basis(other, self.basis), bound
        try:
            value = QQ.convert(other)
        except Exception:  # pylint: disable=broad-except
            return None, None
        return SymFunc.one(self.basis) * value, self.degree_bound


    def __add__(self, other):
        other, bound = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        _add_into(terms, other.terms, bound=bound)
        return SymFunc(self.basis, terms, bound)

    __radd__ = __add__


    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()}, self.degree_bound)


    def __sub__(self, other):
        return self + (-other)


    def __rsub__(self, other):
        return (-self) + other


    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            try:
                value = QQ.convert(other)
            except Exception:  # pylint: disable=broad-except
                return NotImplemented
            return SymFunc(self.basis, {lam: c * value for lam, c in self.terms.items()}, self.degree_bound)
        bound = combine_bounds(self.degree_bound, other.degree_bound)
        if self.basis == other.basis and self.basis in MULTIPLICATIVE_BASES:
            return SymFunc(self.basis, _multiply_p(self.terms, other.terms, bound), bound)
        product = _multiply_p(change_basis(self, 'p').terms, change_basis(other, 'p').terms, bound)
        return change_basis(SymFunc('p', product, bound), self.basis)

    __rmul__ = __mul__


    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = SymFunc.one(self.basis, self.degree_bound)
        for _ in range(exponent):
            result = result * self
        return result


    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == change_basis(other, self.basis).terms
        try:
            return self.terms == (SymFunc.one(self.basis) * QQ.convert(other)).terms
        except Exception:  # pylint: disable=broad-except
            return NotImplemented

    __hash__ = None


    def __bool__(self):
        return bool(self.terms)


    def __repr__(self):
        bound = '' if self.degree_bound is None else f' + O({self.degree_bound + 1})'
        return f'SymFunc({self.basis}: {self}{bound})'


    def __str__(self):
        return render_text(self)


def change_basis(f: SymFunc, target: str) -> SymFunc:
    _check_basis(target)
    if f.basis == target:
        return f
    in_p = {}
    for lam, coeff in f.terms.items():
        _add_into(in_p, _to_p_row(f.basis, lam), coeff)
    if target == 'p':
        return SymFunc('p', in_p, f.degree_bound)
    result = {}
    for mu, coeff in in_p.items():
        _add_into(result, _from_p_row(target, mu), coeff)
    return SymFunc(target, result, f.degree_bound)


def h(*parts, coeff=1):
    return SymFunc.basis_element('h', parts, coeff)


def e(*parts, coeff=1):
    return SymFunc.basis_element('e', parts, coeff)


def p(*parts, coeff=1):
    return SymFunc.basis_element('p', parts, coeff)


def s(*parts, coeff=1):
    return SymFunc.basis_element('s', parts, coeff)


def m(*parts, coeff=1):
    return SymFunc.basis_element('m', parts, coeff)


def complete_series(bound: int, basis='h') -> SymFunc:
    """H = sum_{k <= bound} h_k, the truncated series 1/(1 - q) of
    the q-alphabet.

    """
    if bound is None or bound < 1:
        raise TruncationError('the complete series needs a positive truncation degree')
    return change_basis(SymFunc('h', {(k,) if k else (): 1 for k in range(bound + 1)}, bound), basis)


def kostka(lam, mu) -> int:
    "Number of semistandard tableaux of shape lam and content mu."
    if sum(lam) != sum(mu):
        return 0
    return int(change_basis(s(*lam), 'm').coefficient(Partition.from_exponents(mu)))


def schur_at_ones(mu, r):
    """s_mu(1, ..., 1) with r ones, by the hook-content formula.

    r may be an integer or a sympy Symbol; a symbolic r yields a
    polynomial expression.  Vanishes when mu has more than r parts.

    """
    mu = Partition(mu)
    numerator = 1
    for content in contents(mu):
        numerator = numerator * (r + content)
    denominator = 1
    for hook in hook_lengths(mu):
        denominator *= hook
    if isinstance(r, int):
        return QQ(numerator, denominator)
    return numerator / denominator


def principal_specialization(f: SymFunc, truncation: Optional[int] = None, t=T) -> Poly:
    """f evaluated on the one-variable alphabet {t}, as a polynomial
    in t over QQ.  Each p_k becomes t**k, so h_mu becomes t**|mu|.

    """
    bounds = [b for b in (truncation, f.degree_bound) if b is not None]
    bound = min(bounds) if bounds else None
    coefficients = {}
    for mu, coeff in change_basis(f, 'p').terms.items():
        if bound is not None and mu.weight > bound:
            continue
        key = (mu.weight,)
        coefficients[key] = coefficients.get(key, QQ.zero) + coeff
    return Poly.from_dict({k: v for k, v in coefficients.items() if v} or {(0,): 0}, t, domain=QQ)


def graded_dimension(f: SymFunc, r: int) -> Dict[int, object]:
    """f evaluated at r equal variables, as total degree -> value.
    Each p_mu becomes r**len(mu) * t**|mu|.

    """
    result = {}
    for mu, coeff in change_basis(f, 'p').terms.items():
        result[mu.weight] = result.get(mu.weight, QQ.zero) + coeff * r**len(mu)
    return {degree: value for degree, value in sorted(result.items()) if value}


def _format_coeff(coeff):
    coeff = QQ.convert(coeff)
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f'{coeff.numerator}/{coeff.denominator}'


def render_text(f: SymFunc, name=None) -> str:
    """Plain-text rendering: 1 + 2 h[1] + h[2] + h[1,1] + h[3]."""
    name = name or f.basis
    pieces = []
    for lam, coeff in f.items():
        magnitude = -coeff if coeff < 0 else coeff
        if not lam:
            body = _format_coeff(magnitude)
        elif magnitude == 1:
            body = f'{name}{lam}'
        else:
            body = f'{_format_coeff(magnitude)} {name}{lam}'
        if not pieces:
            pieces.append(f'-{body}' if coeff < 0 else body)
        else:
            pieces.append(f'- {body}' if coeff < 0 else f'+ {body}')
    return ' '.join(pieces) if pieces else '0'


def partition_subscript(lam) -> str:
    if any(part >= 10 for part in lam):
        return ','.join(str(part) for part in lam)
    return ''.join(str(part) for part in lam)


def render_latex(f: SymFunc, name=None) -> str:
    r"""LaTeX rendering: 1+2\,h_{1}+h_{2}+h_{11}+h_{3}."""
    name = name or f.basis
    pieces = []
    for lam, coeff in f.items():
        magnitude = -coeff if coeff < 0 else coeff
        if not lam:
            body = _format_latex_coeff(magnitude)
        elif magnitude == 1:
            body = f'{name}_{{{partition_subscript(lam)}}}'
        else:
            body = f'{_format_latex_coeff(magnitude)}\\,{name}_{{{partition_subscript(lam)}}}'
        sign = '-' if coeff < 0 else ('+' if pieces else '')
        pieces.append(f'{sign}{body}')
    return ''.join(pieces) if pieces else '0'


def _format_latex_coeff(coeff):
    coeff = QQ.convert(coeff)
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f'\\frac{{{coeff.numerator}}}{{{coeff.denominator}}}'


def symfunc_from_terms(basis, pairs: Iterable, degree_bound=None) -> SymFunc:
    "Build from (parts, coeff) pairs, summing repeated partitions."
    terms = {}
    for parts, coeff in pairs:
        key = Partition(parts)
        terms[key] = terms.get(key, QQ.zero) + QQ.convert(coeff)
    return SymFunc(basis, terms, degree_bound)


__all__ = ['BASES', 'BasisError', 'PartitionError', 'SymFunc', 'TruncationError', 'change_basis',
           'complete_series', 'e', 'graded_dimension', 'h', 'kostka', 'm', 'p',
           'principal_specialization', 'render_latex', 'render_text', 's', 'schur_at_ones',
           'symfunc_from_terms']
