from unittest import TestCase
import random

from sympy.polys.domains import QQ

from symfunc.partitions import partitions_of
from symfunc.plethysm import plethysm
from symfunc.symfunc import SymFunc, TruncationError, complete_series, h, p, s
from symfunc.sympoly import SymPolyR, complete_series_poly


def random_h(rng, max_degree):
    terms = {lam: QQ(rng.randint(-3, 3)) for d in range(max_degree + 1) for lam in partitions_of(d)
             if rng.random() < 0.5}
    return SymFunc('h', terms)


class PlethysmTest(TestCase):
    def test_power_sums_compose(self):
        self.assertEqual(plethysm(p(2), p(3)), p(6))


    def test_power_sum_on_alphabet(self):
        alphabet = SymPolyR(2, {(1,): 1})
        self.assertEqual(plethysm(p(3), alphabet).coefficients, {(3,): 1})


    def test_h2_of_one_variable_series(self):
        result = plethysm(h(2), complete_series_poly(1, 3))
        self.assertEqual(result.coefficients, {(): 1, (1,): 1, (2,): 2, (3,): 2})


    def test_constants_are_fixed(self):
        self.assertEqual(plethysm(p(4), SymFunc.one('p') * 3), SymFunc.one('p') * 3)


    def test_h_n_of_single_letter(self):
        for n in range(1, 5):
            self.assertEqual(plethysm(h(n), s(1)), h(n))


    def test_homomorphism_in_first_argument(self):
        rng = random.Random(5)
        g = complete_series(6)
        for _ in range(4):
            F, G = random_h(rng, 3), random_h(rng, 3)
            self.assertEqual(plethysm(F + G, g), plethysm(F, g) + plethysm(G, g))
            self.assertEqual(plethysm(F * G, g), plethysm(F, g) * plethysm(G, g))


    def test_truncation_cannot_exceed_argument(self):
        with self.assertRaises(TruncationError):
            plethysm(h(2), complete_series(3), truncation=4)


    def test_zero_truncation_rejected(self):
        with self.assertRaises(TruncationError):
            plethysm(h(2), SymPolyR(1, {(1,): 1}), truncation=0)
