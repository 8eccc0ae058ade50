from unittest import TestCase

from groups.groups import GroupSpec, act, enumerate_elements
from groups.invariants import (UnsupportedGroupError, generators, orbit_sum, polarized_generators,
                               resolve_policy, reynolds_generators)
from harmonics.poly import ExponentMatrix, Poly


def poly(r, n, *pairs, order=1):
    return Poly(r, n, {ExponentMatrix(A): c for A, c in pairs}, order)


class ReynoldsGeneratorsTest(TestCase):
    def test_s2_one_set(self):
        self.assertEqual(reynolds_generators(GroupSpec(1, 1, 2), 1, 1),
                         [poly(1, 2, ([[1, 0]], 1), ([[0, 1]], 1))])


    def test_cyclic_three_has_nothing_below_degree_three(self):
        self.assertEqual(reynolds_generators(GroupSpec(3, 1, 1), 2, 2), [])
        self.assertEqual(len(reynolds_generators(GroupSpec(3, 1, 1), 2, 3)), 4)


    def test_s2_two_sets(self):
        gens = reynolds_generators(GroupSpec(1, 1, 2), 2, 1)
        self.assertEqual(len(gens), 2)
        self.assertEqual({f.multidegree() for f in gens}, {(1, 0), (0, 1)})


    def test_every_output_is_invariant(self):
        for g, r, k in [(GroupSpec(1, 1, 3), 2, 3), (GroupSpec(4, 4, 2), 2, 4), (GroupSpec(2, 2, 3), 1, 4)]:
            for f in reynolds_generators(g, r, k):
                for w in enumerate_elements(g):
                    self.assertEqual(act(w, f), f)


    def test_orbit_sums_that_cancel(self):
        self.assertFalse(orbit_sum(GroupSpec(4, 1, 1), ExponentMatrix([[2]])))


class PolarizedGeneratorsTest(TestCase):
    def test_s2_two_sets(self):
        expected = [
            poly(2, 2, ([[1, 0], [0, 0]], 1), ([[0, 1], [0, 0]], 1)),
            poly(2, 2, ([[0, 0], [1, 0]], 1), ([[0, 0], [0, 1]], 1)),
            poly(2, 2, ([[2, 0], [0, 0]], 1), ([[0, 2], [0, 0]], 1)),
            poly(2, 2, ([[1, 0], [1, 0]], 1), ([[0, 1], [0, 1]], 1)),
            poly(2, 2, ([[0, 0], [2, 0]], 1), ([[0, 0], [0, 2]], 1)),
        ]
        self.assertEqual(polarized_generators(GroupSpec(1, 1, 2), 2), expected)


    def test_dihedral_three_one_set(self):
        expected = [poly(1, 2, ([[3, 0]], 1), ([[0, 3]], 1), order=3),
                    poly(1, 2, ([[1, 1]], 1), order=3)]
        self.assertEqual(polarized_generators(GroupSpec(3, 3, 2), 1), expected)


    def test_cyclic_one_set(self):
        for m in range(2, 6):
            self.assertEqual(polarized_generators(GroupSpec(m, 1, 1), 1), [poly(1, 1, ([[m]], 1), order=m)])


    def test_every_output_is_invariant(self):
        for g in [GroupSpec(1, 1, 3), GroupSpec(3, 1, 2), GroupSpec(4, 4, 2), GroupSpec(2, 2, 2)]:
            for f in polarized_generators(g, 2):
                for w in enumerate_elements(g):
                    self.assertEqual(act(w, f), f)


    def test_unsupported_family(self):
        with self.assertRaises(UnsupportedGroupError):
            polarized_generators(GroupSpec(4, 2, 2), 1)


class PolicyTest(TestCase):
    def test_auto(self):
        self.assertEqual(resolve_policy(GroupSpec(1, 1, 3), 'auto'), 'polarized')
        self.assertEqual(resolve_policy(GroupSpec(4, 2, 2), 'auto'), 'reynolds')


    def test_explicit_polarized_on_unsupported_group(self):
        with self.assertRaises(UnsupportedGroupError):
            resolve_policy(GroupSpec(2, 2, 3), 'polarized')


    def test_unknown_policy(self):
        with self.assertRaises(ValueError):
            resolve_policy(GroupSpec(1, 1, 2), 'fast')


    def test_degree_filter(self):
        gens = generators(GroupSpec(1, 1, 3), 1, 'polarized', 2)
        self.assertEqual([f.tdeg() for f in gens], [1, 2])
