from unittest import TestCase

from exact_arith.cyclo import CycloNum, CyclotomicOrderError
from harmonics.poly import (ExponentMatrix, Poly, ShapeError, apply_diff, monomial_basis,
                            monomial_count, scalar_product)


def x(i, j, r=2, n=2, order=1):
    return Poly.variable(r, n, i, j, order)


class ExponentMatrixTest(TestCase):
    def test_multidegree_is_row_sums(self):
        A = ExponentMatrix([[2, 1, 0], [0, 0, 3]])
        self.assertEqual(A.multidegree(), (3, 3))
        self.assertEqual(A.tdeg(), 6)
        self.assertEqual(A.column(1), (1, 0))


    def test_from_columns(self):
        self.assertEqual(ExponentMatrix.from_columns([(1, 2), (3, 4)]), ExponentMatrix([[1, 3], [2, 4]]))


    def test_ragged_rows_are_rejected(self):
        with self.assertRaises(ShapeError):
            ExponentMatrix([[1, 2], [3]])


    def test_negative_exponents_are_rejected(self):
        with self.assertRaises(ShapeError):
            ExponentMatrix([[1, -1]])


    def test_str(self):
        self.assertEqual(str(ExponentMatrix([[2, 0], [1, 1]])), 'x11^2*x21*x22')
        self.assertEqual(str(ExponentMatrix.zero(2, 2)), '1')


class MonomialBasisTest(TestCase):
    def test_one_set_two_coordinates(self):
        basis = monomial_basis(1, 2, (1,))
        self.assertEqual(basis, [ExponentMatrix([[1, 0]]), ExponentMatrix([[0, 1]])])


    def test_bidegree_one_one(self):
        self.assertEqual(len(monomial_basis(2, 2, (1, 1))), 4)


    def test_bidegree_two_zero_in_three_coordinates(self):
        basis = monomial_basis(2, 3, (2, 0))
        self.assertEqual(len(basis), 6)
        self.assertTrue(all(A.multidegree() == (2, 0) for A in basis))


    def test_count_matches_binomial_product(self):
        for r, n, d in [(1, 3, (4,)), (2, 3, (2, 1)), (3, 2, (1, 0, 2)), (2, 4, (0, 0))]:
            basis = monomial_basis(r, n, d)
            self.assertEqual(len(basis), monomial_count(n, d))
            self.assertEqual(len(set(basis)), len(basis))


    def test_wrong_number_of_entries(self):
        with self.assertRaises(ShapeError):
            monomial_basis(2, 2, (1,))


class PolyTest(TestCase):
    def test_zero_coefficients_are_dropped(self):
        f = x(0, 0) - x(0, 0)
        self.assertFalse(f)
        self.assertEqual(f.terms, {})


    def test_multiplication(self):
        f = (x(0, 0) + x(0, 1)) * (x(0, 0) - x(0, 1))
        self.assertEqual(f, x(0, 0) * x(0, 0) - x(0, 1) * x(0, 1))


    def test_homogeneity(self):
        self.assertEqual((x(0, 0) * x(1, 1)).multidegree(), (1, 1))
        self.assertFalse((x(0, 0) + x(0, 0) * x(1, 0)).is_homogeneous())


    def test_rational_polys_mix_with_cyclotomic_ones(self):
        zeta = CycloNum.zeta(3)
        f = x(0, 0, order=3) * zeta + x(0, 1)
        self.assertEqual(f.order, 3)
        self.assertEqual(f.coefficient([[0, 1], [0, 0]]), 1)


    def test_different_fields_do_not_mix(self):
        f = x(0, 0, order=3) * CycloNum.zeta(3)
        g = x(0, 0, order=4) * CycloNum.zeta(4)
        with self.assertRaises(CyclotomicOrderError):
            f + g  # pylint: disable=pointless-statement


    def test_shapes_must_agree(self):
        with self.assertRaises(ShapeError):
            x(0, 0) + Poly.variable(1, 2, 0, 0)  # pylint: disable=expression-not-assigned


    def test_hash_allows_deduplication(self):
        self.assertEqual(len({x(0, 0) + x(0, 1), x(0, 1) + x(0, 0)}), 1)


class ApplyDiffTest(TestCase):
    def test_second_power(self):
        self.assertEqual(apply_diff(x(0, 0), x(0, 0) * x(0, 0)), x(0, 0) * 2)


    def test_sum_kills_difference(self):
        self.assertFalse(apply_diff(x(0, 0) + x(0, 1), x(0, 0) - x(0, 1)))


    def test_mixed_monomial_to_constant(self):
        f = x(0, 0) * x(1, 0)
        self.assertEqual(apply_diff(f, f), Poly.monomial(ExponentMatrix.zero(2, 2)))


    def test_output_is_homogeneous_of_lower_degree(self):
        g = x(0, 0) * x(0, 0) * x(1, 1) + x(0, 1) * x(0, 0) * x(1, 0)
        result = apply_diff(x(0, 0), g)
        self.assertEqual(result.multidegree(), (1, 1))


class ScalarProductTest(TestCase):
    def test_square(self):
        f = x(0, 0) * x(0, 0)
        self.assertEqual(scalar_product(f, f), 2)


    def test_distinct_monomials_are_orthogonal(self):
        self.assertEqual(scalar_product(x(0, 0), x(0, 1)), 0)


    def test_monomial_norm_is_product_of_factorials(self):
        A = ExponentMatrix([[3, 1], [0, 2]])
        f = Poly.monomial(A)
        self.assertEqual(scalar_product(f, f), 6 * 1 * 1 * 2)
        self.assertEqual(scalar_product(f, f), apply_diff(f, f).coefficient(ExponentMatrix.zero(2, 2)))


    def test_symmetric_on_rational_inputs(self):
        f = x(0, 0) * x(0, 0) * 3 + x(0, 1) * x(1, 0)
        g = x(0, 0) * x(0, 0) - x(0, 1) * x(1, 0) * 5
        self.assertEqual(scalar_product(f, g), scalar_product(g, f))
        self.assertEqual(scalar_product(f, g), 3 * 2 - 5)
