from unittest import TestCase

from sympy import Poly

from groups.groups import GroupSpec
from harmonics.engine import frobenius_series, hilbert_series
from harmonics.series import FROBENIUS, GradedSeries
from symfunc.partitions import Partition
from symfunc.symfunc import SymFunc
from universal.extract import UniversalityError
from universal.frobenius import (UniversalFrobenius, catalan_check, is_h_positive, mh_form,
                                 multiplicity_polynomials, positivity_report, universal_frobenius)
from universal.reference import (CATALAN, R, multiplicity_formula, s3_mh_form, sn_frobenius_table)

S2 = GroupSpec(1, 1, 2)
S3 = GroupSpec(1, 1, 3)


def from_reference(n):
    table = {Partition(lam): row.terms for lam, row in sn_frobenius_table(n).items()}
    return UniversalFrobenius(n, table)


class UniversalFrobeniusTest(TestCase):
    def test_s2(self):
        u = universal_frobenius(2, frobenius_series(S2, 2), frobenius_series(S2, 1))
        self.assertEqual(u.table, {(2,): {(): 1}, (1, 1): {(1,): 1}})
        self.assertTrue(u.certified)


    def test_s3(self):
        u = universal_frobenius(3, frobenius_series(S3, 3), frobenius_series(S3, 2))
        for lam, row in sn_frobenius_table(3).items():
            self.assertEqual(u.row(lam), row, lam)


    def test_needs_a_frobenius_series(self):
        with self.assertRaises(ValueError):
            universal_frobenius(2, hilbert_series(S2, 2))


    def test_needs_n_sets(self):
        with self.assertRaises(ValueError):
            universal_frobenius(3, frobenius_series(S3, 2))


    def test_restriction_mismatch(self):
        wrong = GradedSeries(FROBENIUS, S2, 1, {(0,): {Partition((2,)): 1}, (1,): {Partition((2,)): 1}})
        with self.assertRaises(UniversalityError) as context:
            universal_frobenius(2, frobenius_series(S2, 2), wrong)
        self.assertEqual(context.exception.multidegree, (1,))


class MonomialFormTest(TestCase):
    def test_s3(self):
        form = mh_form(from_reference(3))
        for nu, expected in s3_mh_form().items():
            self.assertEqual(form[nu], expected, nu)


    def test_h_positive_for_small_n(self):
        for n in (2, 3, 4):
            self.assertTrue(all(positivity_report(from_reference(n)).values()), n)


    def test_is_h_positive(self):
        self.assertTrue(is_h_positive(SymFunc('h', {(1,): 2})))
        self.assertFalse(is_h_positive(SymFunc('s', {(1, 1): 1})))


class CatalanTest(TestCase):
    def test_reference_values(self):
        for (n, r), expected in CATALAN.items():
            self.assertEqual(catalan_check(from_reference(n), r), expected, (n, r))


    def test_two_symmetric(self):
        for r in range(1, 6):
            self.assertEqual(catalan_check(from_reference(2), r), r)


class MultiplicityPolynomialTest(TestCase):
    def test_against_published_formulas(self):
        for n in (2, 3, 4):
            for lam, poly in multiplicity_polynomials(from_reference(n)).items():
                self.assertEqual(poly, Poly(multiplicity_formula(n, lam), R, domain='QQ'), lam)


    def test_numeric(self):
        values = multiplicity_polynomials(from_reference(3), 2)
        self.assertEqual(values, {(3,): 1, (2, 1): 5, (1, 1, 1): 5})
