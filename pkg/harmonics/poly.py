"""Sparse polynomials in an r x n matrix of variables X = (x_ij).

Row i of X is the i-th set of variables and column j the j-th
coordinate, so the group acts on columns and GL_r on rows.  A monomial
X^A is keyed by its exponent matrix A.  Coefficients are CycloNum
values sharing one cyclotomic order.

"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial, perm, prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from exact_arith.cyclo import CycloNum, CyclotomicOrderError


class ShapeError(ValueError):
    pass


class ExponentMatrix(tuple):
    """An r x n matrix of naturals, stored as a tuple of row tuples."""

    def __new__(cls, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(row) for row in rows)
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise ShapeError(f'ragged or empty exponent matrix: {rows}')
        if any(a < 0 for row in rows for a in row):
            raise ShapeError(f'negative exponent in {rows}')
        return super().__new__(cls, rows)


    @staticmethod
    def zero(r: int, n: int) -> ExponentMatrix:
        return ExponentMatrix((0,) * n for _ in range(r))


    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]]) -> ExponentMatrix:
        return ExponentMatrix(zip(*columns))


    @property
    def shape(self):
        return (len(self), len(self[0]))


    def multidegree(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self)


    def tdeg(self) -> int:
        return sum(sum(row) for row in self)


    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self)


    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(len(self[0]))]


    def flat(self) -> Tuple[int, ...]:
        return tuple(a for row in self for a in row)


    def plus(self, other: ExponentMatrix) -> ExponentMatrix:
        return ExponentMatrix(tuple(a + b for a, b in zip(x, y)) for x, y in zip(self, other))


    def factorial_weight(self) -> int:
        "<X^A, X^A> = prod a_ij!."
        return prod(factorial(a) for row in self for a in row)


    def __str__(self):
        factors = []
        for i, row in enumerate(self):
            for j, a in enumerate(row):
                if not a:
                    continue
                name = variable_name(i, j)
                factors.append(name if a == 1 else f'{name}^{a}')
        return '*'.join(factors) if factors else '1'


def variable_name(i: int, j: int) -> str:
    "x11 for the first variable of the first set; indices are 1-based."
    if i < 9 and j < 9:
        return f'x{i + 1}{j + 1}'
    return f'x{i + 1}_{j + 1}'


def monomial_key(A: ExponentMatrix):
    "Graded order: total degree first, then larger leading exponents first."
    return (A.tdeg(), tuple(-a for a in A.flat()))


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> Tuple[Tuple[int, ...], ...]:
    "Weak compositions of total into parts, in descending lexicographic order."
    if parts == 1:
        return ((total,),)
    return tuple((first,) + rest
                 for first in range(total, -1, -1)
                 for rest in compositions(total - first, parts - 1))


def monomial_basis(r: int, n: int, d: Sequence[int]) -> List[ExponentMatrix]:
    """All exponent matrices with row sums d.

    Row i ranges over the weak compositions of d[i], the rows varying
    lexicographically, first row slowest.

    """
    if len(d) != r:
        raise ShapeError(f'multidegree {tuple(d)} has {len(d)} entries, expected {r}')
    if any(di < 0 for di in d):
        raise ShapeError(f'negative multidegree {tuple(d)}')
    return [ExponentMatrix(rows) for rows in product(*(compositions(di, n) for di in d))]


def monomial_count(n: int, d: Sequence[int]) -> int:
    return prod(comb(di + n - 1, n - 1) for di in d)


def differentiate(B: ExponentMatrix, A: ExponentMatrix) -> Optional[Tuple[int, ExponentMatrix]]:
    """d^B X^A as (factor, exponent matrix), or None when it vanishes."""
    factor = 1
    rows = []
    for brow, arow in zip(B, A):
        row = []
        for b, a in zip(brow, arow):
            if b > a:
                return None
            factor *= perm(a, b)
            row.append(a - b)
        rows.append(tuple(row))
    return factor, ExponentMatrix(rows)


class Poly:
    """Sparse polynomial sum_A c_A X^A over Q(zeta_order).

    Zero coefficients are never stored.  Instances are treated as
    immutable; arithmetic returns new objects.

    """
    __slots__ = ('r', 'n', 'order', 'terms')

    def __init__(self, r: int, n: int, terms: Optional[Dict] = None, order: int = 1):
        self.r = r
        self.n = n
        self.order = order
        self.terms = {}
        for A, coeff in (terms or {}).items():
            if not isinstance(A, ExponentMatrix):
                A = ExponentMatrix(A)
            if A.shape != (r, n):
                raise ShapeError(f'monomial of shape {A.shape} in a polynomial of shape {(r, n)}')
            total = self.terms.get(A, CycloNum.zero(order)) + self._scalar(coeff)
            if total:
                self.terms[A] = total
            else:
                self.terms.pop(A, None)


    def _scalar(self, value) -> CycloNum:
        if isinstance(value, CycloNum):
            if value.order == self.order:
                return value
            if value.is_rational():
                return CycloNum.from_rational(self.order, value.to_rational())
            raise CyclotomicOrderError(
                f'coefficient in Q(zeta_{value.order}) for a polynomial over Q(zeta_{self.order})')
        return CycloNum.from_rational(self.order, value)


    @staticmethod
    def monomial(A, coeff=1, order=1) -> Poly:
        A = A if isinstance(A, ExponentMatrix) else ExponentMatrix(A)
        r, n = A.shape
        return Poly(r, n, {A: coeff}, order)


    @staticmethod
    def variable(r: int, n: int, i: int, j: int, order=1) -> Poly:
        "The variable x_ij, 0-indexed."
        rows = [[0] * n for _ in range(r)]
        rows[i][j] = 1
        return Poly.monomial(rows, 1, order)


    @staticmethod
    def zero(r: int, n: int, order=1) -> Poly:
        return Poly(r, n, {}, order)


    def _same_ambient(self, other: Poly):
        if (self.r, self.n) != (other.r, other.n):
            raise ShapeError(f'shapes {(self.r, self.n)} and {(other.r, other.n)} differ')
        if self.order == other.order:
            return self, other
        if other.is_rational():
            return self, other.with_order(self.order)
        if self.is_rational():
            return self.with_order(other.order), other
        raise CyclotomicOrderError(f'cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})')


    def with_order(self, order: int) -> Poly:
        "The same polynomial over Q(zeta_order); only rational ones can move."
        if order == self.order:
            return self
        if not self.is_rational():
            raise CyclotomicOrderError(f'polynomial over Q(zeta_{self.order}) is not rational')
        return Poly(self.r, self.n, {A: c.to_rational() for A, c in self.terms.items()}, order)


    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())


    def items(self):
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))


    def coefficient(self, A) -> CycloNum:
        A = A if isinstance(A, ExponentMatrix) else ExponentMatrix(A)
        return self.terms.get(A, CycloNum.zero(self.order))


    def multidegrees(self):
        return {A.multidegree() for A in self.terms}


    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1


    def multidegree(self) -> Tuple[int, ...]:
        degrees = self.multidegrees()
        if len(degrees) != 1:
            raise ShapeError('multidegree of a zero or inhomogeneous polynomial')
        return degrees.pop()


    def tdeg(self) -> int:
        return max((A.tdeg() for A in self.terms), default=0)


    def __bool__(self):
        return bool(self.terms)


    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly(self.r, self.n, {ExponentMatrix.zero(self.r, self.n): other}, self.order)
        a, b = self._same_ambient(other)
        terms = dict(a.terms)
        for A, coeff in b.terms.items():
            terms[A] = terms[A] + coeff if A in terms else coeff
        return Poly(a.r, a.n, terms, a.order)

    __radd__ = __add__


    def __neg__(self):
        return Poly(self.r, self.n, {A: -c for A, c in self.terms.items()}, self.order)


    def __sub__(self, other):
        return self + (-other)


    def __rsub__(self, other):
        return (-self) + other


    def __mul__(self, other):
        if not isinstance(other, Poly):
            scalar = self._scalar(other)
            return Poly(self.r, self.n, {A: c * scalar for A, c in self.terms.items()}, self.order)
        a, b = self._same_ambient(other)
        terms = {}
        for A, ca in a.terms.items():
            for B, cb in b.terms.items():
                key = A.plus(B)
                terms[key] = terms[key] + ca * cb if key in terms else ca * cb
        return Poly(a.r, a.n, terms, a.order)

    __rmul__ = __mul__


    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if (self.r, self.n) != (other.r, other.n):
            return False
        if self.order != other.order:
            try:
                a, b = self._same_ambient(other)
            except CyclotomicOrderError:
                return False
            return a.terms == b.terms
        return self.terms == other.terms


    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.terms.items())))


    def __repr__(self):
        return f'Poly(r={self.r}, n={self.n}, order={self.order}, {self})'


    def __str__(self):
        pieces = []
        for A, coeff in self.items():
            monomial = str(A)
            if monomial == '1':
                pieces.append(f'({coeff})' if not coeff.is_rational() else str(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append(f'-{monomial}')
            elif coeff.is_rational():
                pieces.append(f'{coeff}*{monomial}')
            else:
                pieces.append(f'({coeff})*{monomial}')
        return ' + '.join(pieces).replace('+ -', '- ') if pieces else '0'


def apply_diff(f: Poly, g: Poly) -> Poly:
    """f(d/dX) applied to g."""
    f, g = f._same_ambient(g)  # pylint: disable=protected-access
    terms = {}
    for B, cf in f.terms.items():
        for A, cg in g.terms.items():
            derived = differentiate(B, A)
            if derived is None:
                continue
            factor, C = derived
            value = cf * cg * factor
            terms[C] = terms[C] + value if C in terms else value
    return Poly(f.r, f.n, terms, f.order)


def scalar_product(f: Poly, g: Poly) -> CycloNum:
    """<f, g> = f(d/dX) g at X = 0.

    Only equal monomials pair, each contributing c_f * c_g * prod a_ij!.

    """
    f, g = f._same_ambient(g)  # pylint: disable=protected-access
    total = CycloNum.zero(f.order)
    for A, cf in f.terms.items():
        cg = g.terms.get(A)
        if cg is not None:
            total = total + cf * cg * A.factorial_weight()
    return total
