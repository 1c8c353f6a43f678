from django.test import SimpleTestCase

from webs_app.combin import BoxSubset, Composition
from webs_app.exceptions import LabelError, WebsError, WeightError
from webs_app.exterior import LinearCombo
from webs_app.howe import (HoweOp, actions_agree, commutant_check, commutant_dimension, divided_power_check,
                           dot_action, end_dim_by_webs, end_dim_prediction, faithfulness_check, fmf_rank,
                           hw_vector_check, spanning_check, type_a_faithfulness_check, weight_space_check,
                           weyl_dim_D)
from webs_app.scalars import FieldSpec, QQ, QQ_I, make_field


class DotActionTests(SimpleTestCase):
    def setUp(self):
        self.f = make_field(QQ)
        self.S = BoxSubset.of(1, 6, [(1, 1), (1, 5), (1, 6)])

    def test_f_moves_a_dot_right(self):
        expected = LinearCombo.basis(self.f, BoxSubset.of(1, 6, [(1, 2), (1, 5), (1, 6)]))
        self.assertEqual(dot_action(HoweOp('f', 1), self.S), expected)

    def test_fishtail_f_removes_a_pair(self):
        self.assertEqual(dot_action(HoweOp('f', 6), self.S), LinearCombo.basis(self.f, BoxSubset.of(1, 6, [(1, 1)])))
        self.assertFalse(dot_action(HoweOp('e', 6), self.S))

    def test_h_is_diagonal(self):
        self.assertEqual(dot_action(HoweOp('h', 1), self.S)[self.S], 1)
        self.assertEqual(dot_action(HoweOp('h', 6), self.S)[self.S], 1)
        self.assertEqual(dot_action(HoweOp('h', 3), self.S)[self.S], 0)

    def test_bad_operators(self):
        with self.assertRaises(WebsError):
            HoweOp('g', 1)
        with self.assertRaises(LabelError):
            HoweOp('e', 1, 0)
        with self.assertRaises(WebsError):
            dot_action(HoweOp('e', 7), self.S)
        with self.assertRaises(WebsError):
            dot_action(HoweOp('e', 1, 2), self.S)


class ActionTests(SimpleTestCase):
    def test_readings_agree(self):
        for N, m in ((1, 2), (2, 2), (3, 2), (1, 3), (2, 3)):
            self.assertTrue(actions_agree(N, m), (N, m))
        self.assertTrue(actions_agree(2, 2, FieldSpec(3)))

    def test_ladders_commute_with_the_orthogonal_group(self):
        for N, m in ((2, 2), (3, 2), (2, 3)):
            self.assertTrue(commutant_check(N, m), (N, m))

    def test_divided_powers(self):
        self.assertTrue(divided_power_check(2, 2, 2))
        self.assertTrue(divided_power_check(3, 2, 2, FieldSpec(5)))

    def test_weights(self):
        for N, m in ((2, 2), (3, 2), (2, 3)):
            self.assertTrue(weight_space_check(N, m), (N, m))

    def test_highest_weight_vectors(self):
        for N, m in ((2, 2), (3, 2), (4, 2)):
            self.assertTrue(hw_vector_check(N, m, QQ_I), (N, m))

    def test_box_too_large(self):
        with self.assertRaises(WebsError):
            actions_agree(4, 4)
        with self.assertRaises(WebsError):
            actions_agree(2, 1)


class DimensionTests(SimpleTestCase):
    def test_weyl_dimensions(self):
        self.assertEqual(weyl_dim_D(Composition((1, 0), 1)), 2)
        self.assertEqual(weyl_dim_D(Composition((1, 1), 1)), 2)
        self.assertEqual(weyl_dim_D(Composition((1, 1, 1), 1)), 4)
        with self.assertRaises(WeightError):
            weyl_dim_D(Composition((0, 0), 1))

    def test_end_dimension_for_one_row(self):
        self.assertEqual(end_dim_prediction(1, 2), 8)
        self.assertEqual(end_dim_by_webs(1, 2, FieldSpec(3)), 8)
        self.assertEqual(end_dim_by_webs(1, 2), 8)

    def test_fmf_rank(self):
        self.assertEqual(fmf_rank((1, 1), (1, 1), 3), 3)
        self.assertEqual(fmf_rank((2,), (2,), 4), 1)


class FullnessTests(SimpleTestCase):
    def test_webs_fill_the_commutant(self):
        for K, L, N in (((1, 1), (1, 1), 3), ((2,), (1, 1), 3), ((1, 1), (2,), 4), ((2,), (2,), 2)):
            self.assertTrue(faithfulness_check(K, L, N), (K, L, N))

    def test_commutant_of_vector_squared(self):
        self.assertEqual(commutant_dimension((1, 1), (1, 1), 3), 3)

    def test_random_composites_stay_in_span(self):
        self.assertTrue(spanning_check((1, 1), (1, 1), 3, samples=25, seed=7, max_label=2))
        self.assertTrue(spanning_check((2,), (1, 1), 2, samples=25, seed=1, max_label=2))

    def test_type_a_sandwiches(self):
        self.assertTrue(type_a_faithfulness_check((1, 1), (1, 1), 3))
        self.assertTrue(type_a_faithfulness_check((1, 2), (2, 1), 3))
