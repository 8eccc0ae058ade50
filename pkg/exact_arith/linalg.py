"""Exact sparse linear algebra over Q(zeta_m).

ExactMatrix is a thin, immutable wrapper around sympy's DomainMatrix.
Entries are CycloNum values; the elimination runs in the smallest
sympy domain holding them (ZZ, QQ or the cyclotomic field), using
fraction-free row reduction.

"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from exact_arith.cyclo import CycloNum, field_degree

logger = logging.getLogger('exact_arith.linalg')

# A 31-bit Mersenne prime; pivots found modulo it are always re-certified exactly.
MODULAR_PRIME = 2**31 - 1

ELIMINATION_METHODS = ('exact', 'modular')

Vector = Tuple[CycloNum, ...]


class NotInSpanError(ValueError):
    """The target vector is not in the column span.  index identifies
    which target failed when several were solved at once.

    """
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


@lru_cache(maxsize=None)
def cyclotomic_domain(m):
    return QQ.cyclotomic_field(m)


def _to_domain(value: CycloNum, domain):
    if domain == ZZ:
        return ZZ(int(value.to_rational().numerator))
    if domain == QQ:
        return value.to_rational()
    return domain(list(reversed(value.coeffs)))


def _from_domain(element, domain, m) -> CycloNum:
    if domain == ZZ:
        return CycloNum.from_rational(m, QQ.convert_from(element, ZZ))
    if domain == QQ:
        return CycloNum.from_rational(m, element)
    low_first = list(reversed(element.to_list()))
    return CycloNum(m, tuple(low_first) + (QQ.zero,) * (field_degree(m) - len(low_first)))


class ExactMatrix:
    """rows x cols matrix with a sparse map (row, col) -> CycloNum.

    Zero entries are never stored.  All entries share the cyclotomic
    order m.

    """
    __slots__ = ('rows', 'cols', 'order', 'entries', '_dm')

    def __init__(self, rows: int, cols: int, entries: Dict[Tuple[int, int], object] = None, order: int = 1):
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = {}
        self._dm = None
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f'entry ({i}, {j}) outside a {rows}x{cols} matrix')
            if not isinstance(value, CycloNum):
                value = CycloNum.from_rational(order, value)
            elif value.order != order:
                raise ValueError(f'entry of order {value.order} in a matrix of order {order}')
            if value:
                self.entries[(i, j)] = value


    @staticmethod
    def from_rows(rows: Sequence[Sequence], order=1):
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        entries = {(i, j): value
                   for i, row in enumerate(rows)
                   for j, value in enumerate(row)}
        return ExactMatrix(n_rows, n_cols, entries, order)


    @staticmethod
    def from_columns(columns: Sequence[Sequence], length=None, order=1):
        if length is None:
            length = len(columns[0]) if columns else 0
        entries = {(i, j): value
                   for j, column in enumerate(columns)
                   for i, value in enumerate(column)}
        return ExactMatrix(length, len(columns), entries, order)


    @staticmethod
    def identity(n, order=1):
        return ExactMatrix(n, n, {(i, i): 1 for i in range(n)}, order)


    @property
    def shape(self):
        return (self.rows, self.cols)


    def nnz(self):
        return len(self.entries)


    def to_rows(self):
        zero = CycloNum.zero(self.order)
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            dense[i][j] = value
        return dense


    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]):
        "Row i of the result is row row_order[i] of self; same for columns."
        row_index = {old: new for new, old in enumerate(row_order)}
        col_index = {old: new for new, old in enumerate(col_order)}
        entries = {(row_index[i], col_index[j]): v for (i, j), v in self.entries.items()}
        return ExactMatrix(self.rows, self.cols, entries, self.order)


    def apply(self, vector: Sequence) -> Vector:
        "The product self * vector."
        if len(vector) != self.cols:
            raise ValueError(f'vector of length {len(vector)} for {self.cols} columns')
        result = [CycloNum.zero(self.order)] * self.rows
        for (i, j), value in self.entries.items():
            if vector[j]:
                result[i] = result[i] + value * vector[j]
        return tuple(result)


    def domain(self):
        values = self.entries.values()
        if all(v.is_rational() for v in values):
            if all(v.to_rational().denominator == 1 for v in values):
                return ZZ
            return QQ
        return cyclotomic_domain(self.order)


    def to_domain_matrix(self) -> DomainMatrix:
        if self._dm is None:
            domain = self.domain()
            dok = {key: _to_domain(value, domain) for key, value in self.entries.items()}
            self._dm = DomainMatrix.from_dok(dok, (self.rows, self.cols), domain)
        return self._dm


    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries


    def __repr__(self):
        return f'ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz()}, order={self.order})'


def _vectors_from_dok(dok, domain, m, length, count) -> List[Vector]:
    zero = CycloNum.zero(m)
    vectors = [[zero] * length for _ in range(count)]
    for (i, j), value in dok.items():
        vectors[j][i] = _from_domain(value, domain, m)
    return [tuple(v) for v in vectors]


def _standard_basis(n, m) -> List[Vector]:
    zero, one = CycloNum.zero(m), CycloNum.one(m)
    return [tuple(one if i == j else zero for i in range(n)) for j in range(n)]


def _rref(A: ExactMatrix):
    dm = A.to_domain_matrix()
    reduced, den, pivots = dm.rref_den(method='FF')
    return dm.domain, reduced.to_dok(), den, list(pivots)


def _exact_kernel(A: ExactMatrix) -> List[Vector]:
    domain, reduced, den, pivots = _rref(A)
    field = domain.get_field()
    den = field.convert_from(den, domain)
    pivot_set = set(pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    free_index = {c: k for k, c in enumerate(free)}
    dok = {(c, k): field.one for k, c in enumerate(free)}
    for (i, j), value in reduced.items():
        if j in free_index:
            dok[(pivots[i], free_index[j])] = -field.convert_from(value, domain) / den
    return _vectors_from_dok(dok, field, A.order, A.cols, len(free))


def _modular_kernel(A: ExactMatrix):
    """Kernel through pivots found modulo MODULAR_PRIME.

    The pivot block is solved exactly and the result checked against
    every row of A, so a returned basis is always exact.  Returns None
    when the matrix is not rational or the prime was unlucky.

    """
    dm = A.to_domain_matrix()
    if dm.domain == QQ:
        _, dm = dm.clear_denoms(convert=True)
    elif dm.domain != ZZ:
        return None
    reduced_p = dm.convert_to(GF(MODULAR_PRIME))
    _, col_pivots = reduced_p.rref()
    _, row_pivots = reduced_p.transpose().rref()
    col_pivots, row_pivots = list(col_pivots), list(row_pivots)
    pivot_set = set(col_pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    if not free:
        return []
    if not col_pivots:
        return _standard_basis(A.cols, A.order)
    block = dm.extract(row_pivots, col_pivots).to_field().to_dense()
    rhs = (-dm.extract(row_pivots, free)).to_field().to_dense()
    solution = block.lu_solve(rhs).to_dok()
    dok = {(c, k): QQ.one for k, c in enumerate(free)}
    for (i, k), value in solution.items():
        dok[(col_pivots[i], k)] = value
    candidate = DomainMatrix.from_dok(dok, (A.cols, len(free)), QQ)
    if not (dm.to_field() * candidate).is_zero_matrix:
        logger.warning('modular kernel failed exact verification on %r, falling back', A)
        return None
    return _vectors_from_dok(dok, QQ, A.order, A.cols, len(free))


def kernel_basis(A: ExactMatrix, method='exact') -> List[Vector]:
    """Basis of {v : A v = 0}.

    With method='exact' the basis is the reduced-echelon one: one
    vector per non-pivot column c, with a 1 at c and 0 at the other
    non-pivot columns.

    """
    if method not in ELIMINATION_METHODS:
        raise ValueError(f'unknown elimination method {method!r}')
    if A.cols == 0:
        return []
    if not A.entries:
        return _standard_basis(A.cols, A.order)
    if method == 'modular':
        vectors = _modular_kernel(A)
        if vectors is not None:
            return vectors
    return _exact_kernel(A)


def rank(A: ExactMatrix, method='exact') -> int:
    if method not in ELIMINATION_METHODS:
        raise ValueError(f'unknown elimination method {method!r}')
    if not A.entries:
        return 0
    if method == 'modular':
        vectors = _modular_kernel(A)
        if vectors is not None:
            return A.cols - len(vectors)
    return len(_rref(A)[3])


def solve_many_in_span(B: ExactMatrix, targets: Sequence[Sequence]) -> List[Vector]:
    """Coefficients expressing each target in the columns of B.

    The columns of B must be independent.  Raises NotInSpanError,
    carrying the offending target's index, if any target lies outside
    the column span.

    """
    k = B.cols
    entries = dict(B.entries)
    for j, target in enumerate(targets):
        if len(target) != B.rows:
            raise ValueError(f'target of length {len(target)} for {B.rows} rows')
        for i, value in enumerate(target):
            entries[(i, k + j)] = value
    augmented = ExactMatrix(B.rows, k + len(targets), entries, B.order)
    if not augmented.entries:
        return [tuple(CycloNum.zero(B.order) for _ in range(k)) for _ in targets]
    domain, reduced, den, pivots = _rref(augmented)
    if pivots[:k] != list(range(k)):
        raise ValueError('columns of B are not linearly independent')
    field = domain.get_field()
    den = field.convert_from(den, domain)
    extra_rows = {i for i, c in enumerate(pivots) if c >= k}

    by_column = {}
    for (i, j), value in reduced.items():
        by_column.setdefault(j, {})[i] = value

    solutions = []
    zero = CycloNum.zero(B.order)
    for j in range(len(targets)):
        column = by_column.get(k + j, {})
        if (k + j) in pivots or any(i in extra_rows for i in column):
            raise NotInSpanError(f'target {j} is not in the column span', index=j)
        coefficients = [zero] * k
        for i, value in column.items():
            coefficients[i] = _from_domain(field.convert_from(value, domain) / den, field, B.order)
        solutions.append(tuple(coefficients))
    return solutions


def solve_in_span(B: ExactMatrix, target: Sequence) -> Vector:
    return solve_many_in_span(B, [target])[0]
