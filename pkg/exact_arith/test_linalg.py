from unittest import TestCase
import random

from exact_arith.cyclo import CycloNum
from exact_arith.linalg import (ExactMatrix, NotInSpanError, kernel_basis, rank, solve_in_span,
                                solve_many_in_span)


def as_ints(vector):
    return tuple(v.to_rational() for v in vector)


def random_low_rank(rng, rows, cols, inner):
    left = [[rng.randint(-3, 3) for _ in range(inner)] for _ in range(rows)]
    right = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)]
    return ExactMatrix.from_rows([[sum(left[i][k] * right[k][j] for k in range(inner)) for j in range(cols)]
                                  for i in range(rows)])


class KernelBasisTest(TestCase):
    def test_single_row(self):
        basis = kernel_basis(ExactMatrix.from_rows([[1, 1]]))
        self.assertEqual([as_ints(v) for v in basis], [(-1, 1)])


    def test_identity_has_trivial_kernel(self):
        self.assertEqual(kernel_basis(ExactMatrix.identity(3)), [])


    def test_dependent_rows(self):
        basis = kernel_basis(ExactMatrix.from_rows([[1, 2], [2, 4]]))
        self.assertEqual(len(basis), 1)
        first, second = as_ints(basis[0])
        self.assertEqual(first, -2 * second)


    def test_empty_matrix_gives_standard_basis(self):
        basis = kernel_basis(ExactMatrix(0, 3))
        self.assertEqual([as_ints(v) for v in basis], [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


    def test_kernel_vectors_are_killed(self):
        rng = random.Random(7)
        for _ in range(20):
            A = random_low_rank(rng, rng.randint(1, 8), rng.randint(1, 8), rng.randint(1, 4))
            basis = kernel_basis(A)
            self.assertEqual(len(basis), A.cols - rank(A))
            for v in basis:
                self.assertFalse(any(A.apply(v)))


    def test_cyclotomic_kernel(self):
        zeta = CycloNum.zeta(3)
        A = ExactMatrix.from_rows([[1, zeta], [zeta, zeta * zeta]], order=3)
        basis = kernel_basis(A)
        self.assertEqual(len(basis), 1)
        self.assertFalse(any(A.apply(basis[0])))
        self.assertEqual(basis[0][1], 1)


class RankTest(TestCase):
    def test_zero_matrix(self):
        self.assertEqual(rank(ExactMatrix(2, 2)), 0)


    def test_identity(self):
        self.assertEqual(rank(ExactMatrix.identity(4)), 4)


    def test_dependent_rows(self):
        self.assertEqual(rank(ExactMatrix.from_rows([[1, 2], [2, 4]])), 1)


    def test_rank_is_invariant_under_permutation(self):
        rng = random.Random(11)
        for _ in range(10):
            A = random_low_rank(rng, 6, 7, 3)
            rows, cols = list(range(6)), list(range(7))
            rng.shuffle(rows)
            rng.shuffle(cols)
            self.assertEqual(rank(A.permuted(rows, cols)), rank(A))


    def test_rational_entries(self):
        A = ExactMatrix.from_rows([[CycloNum.from_rational(1, 1) / 2, 1], [1, 2]])
        self.assertEqual(rank(A), 1)


    def test_unknown_method_raises(self):
        with self.assertRaises(ValueError):
            rank(ExactMatrix.identity(2), method='numeric')


class ModularEliminationTest(TestCase):
    def test_modular_agrees_with_exact_up_to_50x50(self):
        rng = random.Random(1234)
        for size in (5, 12, 25, 50):
            for _ in range(3):
                inner = rng.randint(1, size)
                A = random_low_rank(rng, size, size, inner)
                self.assertEqual(rank(A, method='modular'), rank(A))
                modular = kernel_basis(A, method='modular')
                self.assertEqual(len(modular), len(kernel_basis(A)))
                for v in modular:
                    self.assertFalse(any(A.apply(v)))


    def test_modular_falls_back_on_cyclotomic_entries(self):
        zeta = CycloNum.zeta(4)
        A = ExactMatrix.from_rows([[1, zeta]], order=4)
        self.assertEqual(kernel_basis(A, method='modular'), kernel_basis(A))


class SolveInSpanTest(TestCase):
    def test_identity(self):
        solution = solve_in_span(ExactMatrix.identity(2), (3, 5))
        self.assertEqual(as_ints(solution), (3, 5))


    def test_single_column(self):
        B = ExactMatrix.from_columns([(1, -1)])
        self.assertEqual(as_ints(solve_in_span(B, (2, -2))), (2,))


    def test_not_in_span(self):
        B = ExactMatrix.from_columns([(1, -1)])
        with self.assertRaises(NotInSpanError):
            solve_in_span(B, (1, 1))


    def test_many_targets_reports_failing_index(self):
        B = ExactMatrix.from_columns([(1, 0, 0), (0, 1, 1)])
        with self.assertRaises(NotInSpanError) as context:
            solve_many_in_span(B, [(1, 2, 2), (0, 1, 0), (0, 0, 0)])
        self.assertEqual(context.exception.index, 1)


    def test_zero_target(self):
        B = ExactMatrix.from_columns([(1, 1)])
        self.assertEqual(as_ints(solve_in_span(B, (0, 0))), (0,))


    def test_dependent_columns_rejected(self):
        B = ExactMatrix.from_columns([(1, 1), (2, 2)])
        with self.assertRaises(ValueError):
            solve_in_span(B, (1, 1))
