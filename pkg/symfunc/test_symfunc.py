from unittest import TestCase
import random

from sympy import Symbol, expand
from sympy.polys.domains import QQ

from symfunc.partitions import dominates, partitions_of
from symfunc.symfunc import (BASES, BasisError, SymFunc, TruncationError, change_basis, complete_series,
                             graded_dimension, h, kostka, m, p, principal_specialization, render_latex,
                             render_text, s, schur_at_ones, T)
from symfunc.sympoly import schur_polynomial


def random_symfunc(rng, basis, max_degree):
    terms = {}
    for d in range(max_degree + 1):
        for lam in partitions_of(d):
            if rng.random() < 0.4:
                terms[lam] = QQ(rng.randint(-4, 4), rng.randint(1, 3))
    return SymFunc(basis, terms)


class ChangeBasisTest(TestCase):
    def test_h2_is_s2(self):
        self.assertEqual(change_basis(h(2), 's').terms, s(2).terms)


    def test_h11_by_pieri(self):
        self.assertEqual(change_basis(h(1, 1), 's'), s(2) + s(1, 1))


    def test_h21_by_pieri(self):
        self.assertEqual(change_basis(h(2, 1), 's'), s(3) + s(2, 1))


    def test_e2_in_monomials(self):
        self.assertEqual(change_basis(e2(), 'm'), m(1, 1))


    def test_power_sum_in_schur(self):
        self.assertEqual(change_basis(p(2), 's'), s(2) - s(1, 1))


    def test_round_trips(self):
        rng = random.Random(99)
        for source in BASES:
            f = random_symfunc(rng, source, 6)
            for target in BASES:
                there = change_basis(f, target)
                self.assertEqual(there.basis, target)
                self.assertEqual(change_basis(there, source).terms, f.terms, (source, target))


    def test_kostka_unitriangularity(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                in_s = change_basis(h(*lam), 's')
                self.assertEqual(in_s.coefficient(lam), 1)
                for mu in in_s.terms:
                    self.assertTrue(dominates(mu, lam), (lam, mu))


    def test_cauchy_identity(self):
        # sum_lam h_lam(x) m_lam(y) == sum_lam s_lam(x) s_lam(y)
        for n in range(1, 6):
            index = partitions_of(n)
            in_h = {lam: change_basis(s(*lam), 'h') for lam in index}
            in_m = {lam: change_basis(s(*lam), 'm') for lam in index}
            for mu in index:
                for nu in index:
                    total = sum(in_h[lam].coefficient(mu) * in_m[lam].coefficient(nu) for lam in index)
                    self.assertEqual(total, 1 if mu == nu else 0)


    def test_unknown_basis(self):
        with self.assertRaises(BasisError):
            SymFunc('q')


def e2():
    return SymFunc.basis_element('e', (2,))


class ArithmeticTest(TestCase):
    def test_mixed_basis_addition_uses_left_basis(self):
        total = h(1) + s(1)
        self.assertEqual(total.basis, 'h')
        self.assertEqual(total, h(1) * 2)


    def test_product_in_schur(self):
        self.assertEqual(s(1) * s(1), s(2) + s(1, 1))


    def test_scalars(self):
        self.assertEqual(1 + h(1), h() + h(1))
        self.assertEqual((h(1) - h(1)).terms, {})


    def test_truncated_product(self):
        H = complete_series(3)
        square = H * H
        self.assertEqual(square.degree_bound, 3)
        self.assertEqual(square.degree(), 3)


    def test_mixing_truncations_raises(self):
        with self.assertRaises(TruncationError):
            complete_series(3) + complete_series(4)


    def test_complete_series_needs_positive_bound(self):
        with self.assertRaises(TruncationError):
            complete_series(0)


    def test_kostka_numbers(self):
        self.assertEqual(kostka((2, 1), (1, 1, 1)), 2)
        self.assertEqual(kostka((3,), (1, 1, 1)), 1)
        self.assertEqual(kostka((1, 1, 1), (2, 1)), 0)


class SchurAtOnesTest(TestCase):
    def test_single_box(self):
        for r in range(6):
            self.assertEqual(schur_at_ones((1,), r), r)


    def test_column_of_two_in_two_variables(self):
        self.assertEqual(schur_at_ones((1, 1), 2), 1)


    def test_too_many_parts_vanish(self):
        self.assertEqual(schur_at_ones((1, 1, 1), 2), 0)


    def test_symbolic_multiplicity_of_s21(self):
        r = Symbol('r')
        value = schur_at_ones((2,), r) + schur_at_ones((1,), r)
        self.assertEqual(expand(value - r * (r + 3) / 2), 0)


    def test_agrees_with_explicit_schur_polynomials(self):
        for d in range(7):
            for mu in partitions_of(d):
                for r in range(1, 5):
                    self.assertEqual(schur_polynomial(mu, r).at_ones(), schur_at_ones(mu, r), (mu, r))


class SpecializationTest(TestCase):
    def test_h31_is_t4(self):
        self.assertEqual(principal_specialization(h(3, 1)), T**4)


    def test_s3_universal_series_gives_poincare_polynomial(self):
        f = 1 + h(1) * 2 + h(2) + h(1, 1) + h(3)
        self.assertEqual(principal_specialization(f), 1 + 2 * T + 2 * T**2 + T**3)


    def test_two_row_schur_vanishes_in_one_variable(self):
        self.assertTrue(principal_specialization(s(1, 1)).is_zero)


    def test_truncation(self):
        self.assertEqual(principal_specialization(h(1) + h(3), truncation=2), T)


    def test_graded_dimension(self):
        self.assertEqual(graded_dimension(h(2), 2), {2: 3})
        self.assertEqual(graded_dimension(1 + h(1), 3), {0: 1, 1: 3})


class RenderTest(TestCase):
    def test_text(self):
        f = 1 + h(1) * 2 + h(2) + h(1, 1) + h(3)
        self.assertEqual(render_text(f), '1 + 2 h[1] + h[2] + h[1,1] + h[3]')
        self.assertEqual(str(f), '1 + 2 h[1] + h[2] + h[1,1] + h[3]')


    def test_negative_leading_term(self):
        f = SymFunc('h', {(9,): -1, (8, 1): 18})
        self.assertEqual(render_text(f), '-h[9] + 18 h[8,1]')


    def test_zero(self):
        self.assertEqual(render_text(SymFunc.zero('s')), '0')


    def test_latex(self):
        f = 1 + h(1) * 2 + h(1, 1)
        self.assertEqual(render_latex(f), '1+2\\,h_{1}+h_{11}')
        self.assertEqual(render_latex(SymFunc('h', {(10, 1): 1})), 'h_{10,1}')
