from unittest import TestCase

from symfunc.sympoly import (NotSymmetricError, SymPolyR, complete_series_poly, evaluate_schur_expansion,
                             schur_expand, schur_polynomial)
from symfunc.symfunc import h, s


class SymPolyRTest(TestCase):
    def test_from_monomials_collapses_orbits(self):
        poly = SymPolyR.from_monomials(2, {(2, 0): 1, (0, 2): 1, (1, 1): 1})
        self.assertEqual(poly.coefficients, {(2,): 1, (1, 1): 1})


    def test_from_monomials_rejects_asymmetric_input(self):
        with self.assertRaises(NotSymmetricError):
            SymPolyR.from_monomials(2, {(1, 0): 1})
        with self.assertRaises(NotSymmetricError):
            SymPolyR.from_monomials(2, {(1, 0): 1, (0, 1): 2})


    def test_too_many_parts(self):
        with self.assertRaises(NotSymmetricError):
            SymPolyR(1, {(1, 1): 1})


    def test_product(self):
        q = SymPolyR(2, {(1,): 1})
        self.assertEqual(q * q, SymPolyR(2, {(2,): 1, (1, 1): 2}))


    def test_at_ones(self):
        self.assertEqual(SymPolyR(3, {(): 1, (1,): 1, (1, 1): 2}).at_ones(), 1 + 3 + 6)


    def test_complete_series(self):
        H = complete_series_poly(2, 2)
        self.assertEqual(H.at_ones(), 1 + 2 + 3)


class SchurExpandTest(TestCase):
    def test_s2_in_two_variables(self):
        poly = SymPolyR(2, {(2,): 1, (1, 1): 1})
        self.assertEqual(schur_expand(poly).terms, {(2,): 1})


    def test_s11(self):
        self.assertEqual(schur_expand(SymPolyR(2, {(1, 1): 1})).terms, {(1, 1): 1})


    def test_harm2_series(self):
        poly = SymPolyR(2, {(): 1, (1,): 1})
        self.assertEqual(schur_expand(poly).terms, {(): 1, (1,): 1})


    def test_expanding_schur_polynomials_inverts(self):
        for lam in [(3,), (2, 1), (1, 1, 1), (3, 2, 1), (2, 2)]:
            self.assertEqual(schur_expand(schur_polynomial(lam, 3)).terms, {lam: 1})


    def test_evaluate_schur_expansion_drops_long_partitions(self):
        f = s(1, 1, 1) + s(2)
        self.assertEqual(evaluate_schur_expansion(f, 2), schur_polynomial((2,), 2))


    def test_s3_universal_series_in_two_variables(self):
        f = 1 + h(1) * 2 + h(2) + h(1, 1) + h(3)
        poly = evaluate_schur_expansion(f, 2)
        expected = {(): 1, (1,): 2, (2,): 2, (1, 1): 3, (3,): 1, (2, 1): 1}
        self.assertEqual(poly.coefficients, expected)
        self.assertEqual(poly.at_ones(), 16)
