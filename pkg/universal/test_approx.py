from unittest import TestCase

from sympy import expand

from symfunc.partitions import partitions_of
from symfunc.qanalog import qbinomial
from symfunc.symfunc import SymFunc, TruncationError, h, principal_specialization, s
from symfunc.sympoly import SymPolyR, evaluate_schur_expansion
from universal.approx import (agrees_to_degree, coinvariant_ring_series, invert_series, low_degree_approx,
                              low_degree_hilbert, low_degree_hilbert_symbolic, missing_terms)
from universal.reference import LOW_DEGREE_HILBERT, sn_frobenius_table, sn_h_expansion


class InvertSeriesTest(TestCase):
    def test_geometric(self):
        f = SymFunc('h', {(): 1, (1,): 1}, 3)
        self.assertEqual(invert_series(f, 3), h() - h(1) + h(1, 1) - h(1, 1, 1))


    def test_constant_term_must_be_one(self):
        with self.assertRaises(ValueError):
            invert_series(SymFunc('h', {(): 2}, 2), 2)


class LowDegreeApproxTest(TestCase):
    def test_zero_truncation(self):
        with self.assertRaises(TruncationError):
            low_degree_approx(3, 0)


    def test_hilbert_of_three_is_exact(self):
        self.assertEqual(low_degree_hilbert(3, 3), sn_h_expansion(3))
        self.assertEqual(low_degree_approx(3, 3).hilbert(), sn_h_expansion(3))


    def test_one_variable_gives_q_multinomials(self):
        approximation = low_degree_approx(3, 3)
        for lam in partitions_of(3):
            self.assertEqual(principal_specialization(approximation.monomial_form[lam]), qbinomial(3, lam), lam)


    def test_four_agrees_to_degree_four(self):
        self.assertTrue(agrees_to_degree(low_degree_approx(4, 4), sn_frobenius_table(4), 4))


    def test_four_missing_terms(self):
        missing = missing_terms(low_degree_approx(4, 4), sn_frobenius_table(4))
        self.assertEqual(missing, {(2, 1, 1): s(5), (1, 1, 1, 1): s(4, 1) + s(6)})


    def test_symbolic_coefficients(self):
        expected = {mu: expand(value) for mu, value in LOW_DEGREE_HILBERT.items()}
        self.assertEqual(low_degree_hilbert_symbolic(3), expected)


class CoinvariantRingSeriesTest(TestCase):
    def test_two_in_one_variable(self):
        series = coinvariant_ring_series(2, 1, 2)
        self.assertEqual(series.frobenius[(2,)], SymPolyR(1, {(): 1, (1,): 1, (2,): 2}))
        self.assertEqual(series.frobenius[(1, 1)], SymPolyR(1, {(1,): 1, (2,): 1}))


    def test_invariant_dimensions(self):
        self.assertEqual(coinvariant_ring_series(2, 2, 2).dimensions(), {0: 1, 1: 2, 2: 6})


    def test_free_module_in_one_variable(self):
        series = coinvariant_ring_series(3, 1, 3)
        for lam, row in sn_frobenius_table(3).items():
            self.assertEqual(series.quotient[lam], evaluate_schur_expansion(row, 1), lam)
