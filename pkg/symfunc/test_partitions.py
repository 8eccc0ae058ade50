from unittest import TestCase

from symfunc.partitions import (Partition, PartitionError, class_size, dominates, graded_key,
                                hook_length_dimension, partitions_of, partitions_up_to, z_value)


class PartitionTest(TestCase):
    def test_rejects_increasing_parts(self):
        with self.assertRaises(PartitionError):
            Partition((1, 2))


    def test_rejects_zero_parts(self):
        with self.assertRaises(PartitionError):
            Partition((2, 0))


    def test_equals_plain_tuple(self):
        self.assertEqual(Partition((2, 1)), (2, 1))
        self.assertEqual(hash(Partition((2, 1))), hash((2, 1)))


    def test_from_exponents_sorts_and_drops_zeros(self):
        self.assertEqual(Partition.from_exponents((0, 2, 1, 2)), (2, 2, 1))


    def test_conjugate(self):
        self.assertEqual(Partition((3, 1)).conjugate(), (2, 1, 1))
        self.assertEqual(Partition().conjugate(), ())


    def test_str_uses_brackets(self):
        self.assertEqual(str(Partition((1, 1))), '[1,1]')
        self.assertEqual(str(Partition()), '[]')


class PartitionsOfTest(TestCase):
    def test_at_most_two_parts(self):
        self.assertEqual(partitions_of(4, max_parts=2), [(4,), (3, 1), (2, 2)])


    def test_zero_has_only_the_empty_partition(self):
        self.assertEqual(partitions_of(0), [()])


    def test_five_has_seven_partitions(self):
        self.assertEqual(len(partitions_of(5, max_parts=5)), 7)


    def test_max_part(self):
        self.assertEqual(partitions_of(4, max_part=2), [(2, 2), (2, 1, 1), (1, 1, 1, 1)])


    def test_order_is_reverse_lexicographic(self):
        parts = partitions_of(6)
        self.assertEqual(parts, sorted(parts, reverse=True))
        self.assertEqual(len(set(parts)), 11)


    def test_partitions_up_to_is_graded(self):
        parts = partitions_up_to(3)
        self.assertEqual(parts, [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
        self.assertEqual(parts, sorted(parts, key=graded_key))


class CombinatoricsTest(TestCase):
    def test_z_value(self):
        self.assertEqual(z_value((1, 1, 1)), 6)
        self.assertEqual(z_value((2, 1)), 2)
        self.assertEqual(z_value((2, 2)), 8)


    def test_class_sizes_sum_to_factorial(self):
        for n in range(1, 7):
            self.assertEqual(sum(class_size(mu) for mu in partitions_of(n)), [1, 2, 6, 24, 120, 720][n - 1])


    def test_hook_length_dimensions(self):
        self.assertEqual(hook_length_dimension((2, 1)), 2)
        self.assertEqual(hook_length_dimension((2, 2)), 2)
        self.assertEqual(hook_length_dimension((3, 1)), 3)
        for n in range(1, 7):
            total = sum(hook_length_dimension(lam)**2 for lam in partitions_of(n))
            self.assertEqual(total, [1, 2, 6, 24, 120, 720][n - 1])


    def test_dominance(self):
        self.assertTrue(dominates((3,), (2, 1)))
        self.assertTrue(dominates((2, 2), (2, 1, 1)))
        self.assertFalse(dominates((3, 1, 1, 1), (2, 2, 2)))
        self.assertFalse(dominates((2, 2, 2), (3, 1, 1, 1)))
