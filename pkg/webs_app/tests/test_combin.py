from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from webs_app.combin import (BoxSubset, Composition, OWeight, box_subsets, column_weight, complement_transpose,
                             composition_to_so_weight, dagger, dagger_reverses_order, dominance_covers,
                             dominance_leq, dominant_compositions, enumerate_compositions, interleave_length,
                             is_antidominant, is_dominant, leq_p, o_order_leq, o_order_less, o_weights,
                             p_adic_digits, partitions_in_box, reading_sign, transpose, twist, y_order)
from webs_app.exceptions import CombinatoricsError, WeightError

disjoint_pairs = st.sets(st.integers(1, 8)).flatmap(
    lambda T: st.tuples(st.just(T), st.sets(st.integers(1, 8).filter(lambda x: x not in T))))


class InterleaveTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(interleave_length({1}, {2}), 0)
        self.assertEqual(interleave_length({2}, {1}), 1)
        self.assertEqual(interleave_length({1, 3}, {2, 4}), 1)

    def test_overlap_rejected(self):
        with self.assertRaises(CombinatoricsError):
            interleave_length({1, 2}, {2})

    @settings(max_examples=200, deadline=None)
    @given(disjoint_pairs)
    def test_complementary(self, pair):
        T, U = pair
        self.assertEqual(interleave_length(T, U) + interleave_length(U, T), len(T) * len(U))


class BoxSubsetTests(SimpleTestCase):
    def test_cells_outside_box(self):
        with self.assertRaises(CombinatoricsError):
            BoxSubset.of(2, 2, [(3, 1)])
        with self.assertRaises(CombinatoricsError):
            BoxSubset.of(2, 2, [(1, 1), (1, 1)])

    def test_json(self):
        S = BoxSubset.of(3, 2, [(2, 1), (1, 2)])
        self.assertEqual(BoxSubset.from_json(S.to_json()), S)
        with self.assertRaises(CombinatoricsError):
            BoxSubset.from_json({'N': 2})

    def test_enumeration_count(self):
        self.assertEqual(len(list(box_subsets(2, 3))), 64)

    def test_reading_sign_examples(self):
        self.assertEqual(reading_sign(BoxSubset.of(2, 2, [(1, 1)])), 1)
        self.assertEqual(reading_sign(BoxSubset.of(2, 2, [(1, 2), (2, 1)])), -1)
        self.assertEqual(reading_sign(BoxSubset.of(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)])), -1)

    def test_column_weight(self):
        S = BoxSubset.from_columns(3, [(1, 2, 3), (2,), (), (), (1,), (3,)])
        self.assertEqual(column_weight(S).entries, (3, 1, 0, 0, 1, 1))
        self.assertEqual(column_weight(BoxSubset.of(2, 3, [])).entries, (0, 0, 0))
        full = BoxSubset.of(2, 3, [(r, c) for r in (1, 2) for c in (1, 2, 3)])
        self.assertEqual(column_weight(full).entries, (2, 2, 2))


class WeightTests(SimpleTestCase):
    def test_so_weight_conversion(self):
        self.assertEqual(composition_to_so_weight(Composition((1, 0, 1, 1, 0, 0), 1)).halves, (1, -1, 1, 1, -1, -1))
        self.assertEqual(composition_to_so_weight(Composition((2, 2, 1, 1, 1, 1), 2)).halves, (2, 2, 0, 0, 0, 0))
        self.assertEqual(composition_to_so_weight(Composition((1, 1), 2)).halves, (0, 0))

    def test_dominance_of_compositions(self):
        self.assertTrue(is_dominant(Composition((1, 0), 1)))
        self.assertTrue(is_dominant(Composition((1, 1), 1)))
        self.assertFalse(is_dominant(Composition((0, 0), 1)))
        self.assertTrue(is_dominant(Composition((3, 3, 3), 3)))
        self.assertTrue(is_antidominant(Composition((0, 0, 0), 3)))
        self.assertEqual([K.entries for K in dominant_compositions(2, 1)], [(1, 0), (1, 1)])

    def test_enumeration(self):
        self.assertEqual(len(enumerate_compositions(3, 2)), 27)

    def test_negative_entries(self):
        with self.assertRaises(CombinatoricsError):
            Composition((1, -1), 2)


class PartitionTests(SimpleTestCase):
    def test_transpose(self):
        self.assertEqual(transpose((3, 1)), (2, 1, 1))
        self.assertEqual(transpose(()), ())

    def test_hasse_diagram_of_six(self):
        family = [Y for Y in partitions_in_box(6, 6) if sum(Y) == 6]
        self.assertEqual(len(family), 11)
        covers = set(dominance_covers(family))
        expected = {
            ((5, 1), (6,)), ((4, 2), (5, 1)), ((4, 1, 1), (4, 2)), ((3, 3), (4, 2)),
            ((3, 2, 1), (4, 1, 1)), ((3, 2, 1), (3, 3)), ((3, 1, 1, 1), (3, 2, 1)), ((2, 2, 2), (3, 2, 1)),
            ((2, 2, 1, 1), (3, 1, 1, 1)), ((2, 2, 1, 1), (2, 2, 2)), ((2, 1, 1, 1, 1), (2, 2, 1, 1)),
            ((1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1)),
        }
        self.assertEqual(covers, expected)
        self.assertFalse(dominance_leq((4, 1, 1), (3, 3)))
        self.assertFalse(dominance_leq((3, 3), (4, 1, 1)))

    def test_complement_transpose_reverses_dominance(self):
        box = partitions_in_box(3, 3)
        for Y in box:
            for Y2 in box:
                if sum(Y) != sum(Y2) or not dominance_leq(Y, Y2):
                    continue
                self.assertTrue(dominance_leq(complement_transpose(Y2, 3, 3), complement_transpose(Y, 3, 3)))

    def test_complement_transpose_rejects_large(self):
        with self.assertRaises(WeightError):
            complement_transpose((4,), 3, 3)


class OWeightTests(SimpleTestCase):
    def test_twist(self):
        self.assertEqual(twist((1,), 3), (1, 1))
        with self.assertRaises(WeightError):
            twist((2, 2), 3)

    def test_from_partition(self):
        self.assertEqual(OWeight.from_partition((1, 1, 1), 3), OWeight((), -1, 3))
        self.assertEqual(OWeight.from_partition((), 3), OWeight((), 1, 3))
        self.assertEqual(OWeight.from_partition((1, 1), 4), OWeight((1, 1), 0, 4))
        self.assertEqual(OWeight.from_partition((1, 1, 1), 3).partition_form(), (1, 1, 1))
        with self.assertRaises(WeightError):
            OWeight.from_partition((2, 2), 3)

    def test_epsilon_consistency(self):
        with self.assertRaises(WeightError):
            OWeight((1, 1), 1, 4)
        with self.assertRaises(WeightError):
            OWeight((1,), 0, 3)

    def test_order_examples(self):
        for N in (3, 4):
            zero = OWeight.from_partition((), N)
            det = OWeight.from_partition((1,) * N, N)
            two = OWeight.from_partition((1, 1), N)
            self.assertFalse(o_order_leq(zero, det))
            self.assertFalse(o_order_leq(det, zero))
            self.assertTrue(o_order_less(zero, two))
            self.assertTrue(o_order_less(det, two))

    def test_dagger_small(self):
        images = sorted(dagger(lam, 1).entries for lam in o_weights(1, 1))
        self.assertEqual(images, [(0,), (1,)])
        images = sorted(dagger(lam, 2).entries for lam in o_weights(1, 2))
        self.assertEqual(images, [(1, 0), (1, 1)])

    def test_dagger_reverses_order(self):
        for N in (1, 2, 3):
            for m in (1, 2, 3):
                self.assertTrue(dagger_reverses_order(N, m), (N, m))

    def test_dagger_rejects_wide_weights(self):
        with self.assertRaises(WeightError):
            dagger(OWeight((3,), 1, 3), 2)

    def test_y_order_is_strict(self):
        K = Composition((1, 1), 1)
        self.assertFalse(y_order(K, K))


class DigitTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(p_adic_digits(4, 3).digits, (1, 1))
        self.assertFalse(leq_p(2, 4, 3))
        self.assertTrue(leq_p(3, 4, 3))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10 ** 6), st.sampled_from([3, 5, 7]))
    def test_reconstructs(self, N, p):
        digits = p_adic_digits(N, p)
        self.assertEqual(digits.value, N)
        self.assertTrue(all(0 <= d < p for d in digits.digits))
