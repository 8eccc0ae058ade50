from unittest import TestCase

from sympy import Poly

from groups.groups import GroupSpec
from harmonics.engine import hilbert_series
from harmonics.series import HILBERT, GradedSeries
from symfunc.partitions import Partition
from universal.extract import (UniversalExpansion, UniversalityError, dimension_polynomial,
                               extract_universal, h_expansion)
from universal.reference import R, dimension_formula

S2 = GroupSpec(1, 1, 2)
S3 = GroupSpec(1, 1, 3)


def s3_expansion():
    return extract_universal(S3, hilbert_series(S3, 3), hilbert_series(S3, 2))


class ExtractUniversalTest(TestCase):
    def test_s2(self):
        u = extract_universal(S2, hilbert_series(S2, 2), hilbert_series(S2, 1))
        self.assertEqual(u.coefficients, {(): 1, (1,): 1})
        self.assertTrue(u.certified)
        self.assertEqual(u.certified_rank, 2)


    def test_s3(self):
        u = s3_expansion()
        self.assertEqual(u.coefficients, {(): 1, (1,): 2, (2,): 2, (1, 1): 1, (3,): 1})
        self.assertEqual(h_expansion(u), {(): 1, (1,): 2, (2,): 1, (1, 1): 1, (3,): 1})


    def test_cyclic(self):
        g = GroupSpec(3, 1, 1)
        u = extract_universal(g, hilbert_series(g, 1))
        self.assertEqual(u.coefficients, {(): 1, (1,): 1, (2,): 1})
        self.assertTrue(u.certified)


    def test_uncertified_without_lower_series(self):
        self.assertFalse(extract_universal(S2, hilbert_series(S2, 2)).certified)


    def test_needs_n_sets(self):
        with self.assertRaises(ValueError):
            extract_universal(S3, hilbert_series(S3, 2))


    def test_truncated_series_is_refused(self):
        with self.assertRaises(ValueError):
            extract_universal(S2, hilbert_series(S2, 2, max_tdeg=0))


    def test_restriction_mismatch_names_the_multidegree(self):
        wrong = GradedSeries(HILBERT, S2, 1, {(0,): 1})
        with self.assertRaises(UniversalityError) as context:
            extract_universal(S2, hilbert_series(S2, 2), wrong)
        self.assertEqual(context.exception.multidegree, (1,))


    def test_negative_coefficients_are_refused_for_symmetric_groups(self):
        series = GradedSeries(HILBERT, S2, 2, {(0, 0): 1, (2, 0): 1, (0, 2): 1})
        with self.assertRaises(UniversalityError):
            extract_universal(S2, series)


class HExpansionTest(TestCase):
    def test_one_part_schur_function(self):
        u = UniversalExpansion(S2, {Partition((3,)): 1})
        self.assertEqual(h_expansion(u), {(3,): 1})


    def test_one_variable_is_the_poincare_polynomial(self):
        self.assertEqual(s3_expansion().one_variable().all_coeffs(), [1, 2, 2, 1])


class DimensionPolynomialTest(TestCase):
    def test_s3_values(self):
        u = s3_expansion()
        self.assertEqual(dimension_polynomial(u, 1), 6)
        self.assertEqual(dimension_polynomial(u, 2), 16)
        self.assertEqual(dimension_polynomial(u, 3), 32)


    def test_s3_symbolic(self):
        self.assertEqual(dimension_polynomial(s3_expansion(), R), Poly(dimension_formula(3), R, domain='QQ'))


    def test_evaluate_reproduces_the_series(self):
        u = s3_expansion()
        self.assertEqual(u.evaluate(2), hilbert_series(S3, 2).as_sympoly())
