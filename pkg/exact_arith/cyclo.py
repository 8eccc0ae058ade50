"""Elements of the cyclotomic field Q(zeta_m).

A CycloNum is stored densely as its coefficient vector in the power
basis 1, zeta, zeta**2, ..., zeta**(phi(m) - 1), lowest power first.
Every arithmetic operation reduces modulo the m-th cyclotomic
polynomial, so two equal field elements always have equal vectors.

For m in (1, 2) the field is Q itself and the vector has length 1.

"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.factortools import dup_zz_cyclotomic_poly

# pylint: disable=invalid-name


class CyclotomicOrderError(ValueError):
    pass




@lru_cache(maxsize=None)
def cyclotomic_modulus(m):
    """The m-th cyclotomic polynomial over QQ, highest degree first."""
    if m < 1:
        raise CyclotomicOrderError(f'cyclotomic order must be positive, not {m}')
    return tuple(dup_zz_cyclotomic_poly(m, QQ))


def field_degree(m):
    return len(cyclotomic_modulus(m)) - 1


def _to_dense(coeffs):
    "Low-first coefficient vector to a stripped sympy dup (high-first)."
    return dup_strip([QQ.convert(c) for c in reversed(coeffs)])


def _from_dense(f, m):
    degree = field_degree(m)
    low_first = list(reversed(f))
    return tuple(low_first + [QQ.zero] * (degree - len(low_first)))


def cyclo_reduce(coeffs: Iterable, m: int) -> CycloNum:
    """Reduce sum(coeffs[k] * zeta_m**k) to canonical form.

    coeffs may be longer than phi(m); the tail is folded back through
    the cyclotomic polynomial.

    """
    modulus = list(cyclotomic_modulus(m))
    reduced = dup_rem(_to_dense(list(coeffs)), modulus, QQ)
    return CycloNum(m, _from_dense(reduced, m))


class CycloNum:
    __slots__ = ('order', 'coeffs', '_hash')

    def __init__(self, order: int, coeffs: Tuple):
        degree = field_degree(order)
        if len(coeffs) != degree:
            raise CyclotomicOrderError(
                f'Q(zeta_{order}) needs {degree} coefficients, got {len(coeffs)}')
        self.order = order
        self.coeffs = tuple(QQ.convert(c) for c in coeffs)
        self._hash = None


    @staticmethod
    def from_rational(m, value):
        value = QQ.convert(value)
        return CycloNum(m, (value,) + (QQ.zero,) * (field_degree(m) - 1))


    @staticmethod
    def zero(m):
        return CycloNum.from_rational(m, 0)


    @staticmethod
    def one(m):
        return CycloNum.from_rational(m, 1)


    @staticmethod
    def zeta(m, power=1):
        "The root of unity zeta_m**power, for any integer power."
        power %= m
        return cyclo_reduce([0] * power + [1], m)


    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise CyclotomicOrderError(
                    f'cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})')
            return other
        try:
            return CycloNum.from_rational(self.order, other)
        except Exception:  # pylint: disable=broad-except
            return None


    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__


    def __neg__(self):
        return CycloNum(self.order, tuple(-a for a in self.coeffs))


    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


    def __rsub__(self, other):
        return -self + other


    def __mul__(self, other):
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise CyclotomicOrderError(
                    f'cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})')
            if len(self.coeffs) == 1:
                return CycloNum(self.order, (self.coeffs[0] * other.coeffs[0],))
            product = dup_mul(_to_dense(self.coeffs), _to_dense(other.coeffs), QQ)
            reduced = dup_rem(product, list(cyclotomic_modulus(self.order)), QQ)
            return CycloNum(self.order, _from_dense(reduced, self.order))
        try:
            scalar = QQ.convert(other)
        except Exception:  # pylint: disable=broad-except
            return NotImplemented
        return CycloNum(self.order, tuple(a * scalar for a in self.coeffs))

    __rmul__ = __mul__


    def inverse(self):
        if not self:
            raise ZeroDivisionError('inverse of zero in a cyclotomic field')
        if len(self.coeffs) == 1:
            return CycloNum(self.order, (QQ.one / self.coeffs[0],))
        inverted = dup_invert(_to_dense(self.coeffs), list(cyclotomic_modulus(self.order)), QQ)
        return CycloNum(self.order, _from_dense(inverted, self.order))


    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()


    def __rtruediv__(self, other):
        return self.inverse() * other


    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = CycloNum.one(self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result


    def __bool__(self):
        return any(self.coeffs)


    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.order == other.order and self.coeffs == other.coeffs
        try:
            other = CycloNum.from_rational(self.order, other)
        except Exception:  # pylint: disable=broad-except
            return NotImplemented
        return self.coeffs == other.coeffs


    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash


    def is_rational(self):
        return not any(self.coeffs[1:])


    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f'{self} is not rational')
        return self.coeffs[0]


    def to_int(self):
        value = self.to_rational()
        if value.denominator != 1:
            raise ValueError(f'{self} is not an integer')
        return int(value.numerator)


    def __repr__(self):
        return f'CycloNum({self.order}, {self})'


    def __str__(self):
        terms = []
        for power, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            if power == 0:
                terms.append(str(coeff))
            else:
                zeta = f'z{self.order}' if power == 1 else f'z{self.order}^{power}'
                terms.append(zeta if coeff == 1 else f'({coeff})*{zeta}')
        return ' + '.join(terms) if terms else '0'
