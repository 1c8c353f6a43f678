from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from webs_app.combin import BoxSubset, box_subsets, reading_sign
from webs_app.exceptions import CombinatoricsError, FieldError
from webs_app.exterior import (LinearCombo, abu_change_of_basis, apply_del, apply_x, check_pairing, derivation_on_block,
                               exterior_basis, exterior_power, far_right_subset, from_phi_h, from_phi_v,
                               group_on_block, label_dim, leibniz_check, pairing_matrix, phi_h, phi_v,
                               raising_operators, row_reading_product, sigma_matrix, so_generators, tensor_index)
from webs_app.matrices import SparseMatrix
from webs_app.scalars import FieldSpec, QQ, QQ_I, make_field


class CliffordTests(SimpleTestCase):
    def test_examples(self):
        f = make_field(QQ)
        self.assertEqual(apply_x(2, LinearCombo.basis(f, (1,))), LinearCombo(f, {(1, 2): -1}))
        self.assertEqual(apply_x(1, LinearCombo.basis(f, (2,))), LinearCombo(f, {(1, 2): 1}))
        self.assertFalse(apply_x(1, LinearCombo.basis(f, (1,))))
        self.assertEqual(apply_del(2, LinearCombo.basis(f, (1, 2))), LinearCombo(f, {(1,): -1}))
        self.assertFalse(apply_del(3, LinearCombo.basis(f, (1, 2))))

    def test_leibniz(self):
        for m in (1, 2, 3, 4):
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    self.assertTrue(leibniz_check(i, j, m), (i, j, m))

    def test_nilpotent(self):
        f = make_field(FieldSpec(5))
        for S in ((), (1,), (2, 3), (1, 2, 3)):
            v = LinearCombo.basis(f, S)
            for i in (1, 2, 3):
                self.assertFalse(apply_x(i, apply_x(i, v)))
                self.assertFalse(apply_del(i, apply_del(i, v)))


class BasisTests(SimpleTestCase):
    def test_colex(self):
        self.assertEqual(exterior_basis(3, 2), ((1, 2), (1, 3), (2, 3)))
        self.assertEqual(exterior_basis(3, 0), ((),))
        self.assertEqual(exterior_basis(2, 3), ())

    def test_label_dims(self):
        self.assertEqual(label_dim((1, 2), 3), 9)
        self.assertEqual(label_dim((4,), 3), 0)
        self.assertEqual(label_dim((), 3), 1)

    def test_first_factor_slowest(self):
        self.assertEqual(tensor_index(((1,), (2,)), (1, 1), 2), 1)
        self.assertEqual(tensor_index(((2,), (1,)), (1, 1), 2), 2)


class ReadingTests(SimpleTestCase):
    def test_phi_round_trip(self):
        S = BoxSubset.of(3, 2, [(1, 1), (3, 1), (2, 2)])
        self.assertEqual(phi_h(S), ((1,), (2,), (1,)))
        self.assertEqual(phi_v(S), ((1, 3), (2,)))
        self.assertEqual(from_phi_h(phi_h(S), 2), S)
        self.assertEqual(from_phi_v(phi_v(S), 3), S)

    def test_four_by_four_example(self):
        S = BoxSubset.from_rows(4, [(2,), (1, 4), (1, 2), (2,)])
        self.assertEqual(phi_h(S), ((2,), (1, 4), (1, 2), (2,)))
        self.assertEqual(phi_v(S), ((2, 3), (1, 3, 4), (), (2,)))
        self.assertEqual(reading_sign(S), -1)

    def test_row_reading_is_signed_column_reading(self):
        """Row reading product = reading_sign * column reading basis vector, for N m <= 9."""
        f = make_field(QQ)
        for N, m in ((1, 3), (2, 2), (3, 2), (2, 4), (3, 3)):
            for S in box_subsets(N, m):
                expected = LinearCombo.basis(f, S.cells).scale(reading_sign(S))
                self.assertEqual(row_reading_product(S), expected, S)

    @settings(max_examples=50, deadline=None)
    @given(st.sets(st.tuples(st.integers(1, 3), st.integers(1, 3))))
    def test_reading_sign_matches_oracle(self, cells):
        S = BoxSubset.of(3, 3, cells)
        product = row_reading_product(S)
        self.assertEqual(list(product.items()), [(S.cells, reading_sign(S))])


class GroupActionTests(SimpleTestCase):
    def test_exterior_power_of_sigma(self):
        f = make_field(QQ)
        sigma = sigma_matrix(3)
        top = exterior_power(sigma, 3)
        self.assertEqual(top, SparseMatrix.identity(f, 1).scale(-1))

    def test_derivation_is_a_lie_map(self):
        gens = so_generators(3)
        labels = (1, 2)
        for a in gens:
            for b in gens:
                bracket = a @ b - b @ a
                lhs = derivation_on_block(bracket, labels)
                da, db = derivation_on_block(a, labels), derivation_on_block(b, labels)
                self.assertEqual(lhs, da @ db - db @ da)

    def test_group_on_block_multiplicative(self):
        sigma = sigma_matrix(4)
        g = group_on_block(sigma, (1, 2))
        self.assertEqual(g @ g, SparseMatrix.identity(g.field, g.nrows))


class AbuBasisTests(SimpleTestCase):
    def test_needs_sqrt_minus_one(self):
        with self.assertRaises(FieldError):
            abu_change_of_basis(3, QQ)

    def test_pairing(self):
        """(a_i, b_j) = delta_ij, (a_i, a_j) = (b_i, b_j) = 0 and (u, u) = 1."""
        for N in (2, 3, 4, 5):
            C = abu_change_of_basis(N, QQ_I)
            G = pairing_matrix(C)
            f = G.field
            for r in range(N):
                for c in range(N):
                    expected = f.one if r + c == N - 1 else f.zero
                    self.assertEqual(G.entry(r, c), expected, (N, r, c))

    def test_bad_columns_are_rejected(self):
        f = make_field(QQ_I)
        check_pairing(SparseMatrix.identity(f, 1))
        for spec in (QQ_I, FieldSpec(3, True), FieldSpec(5)):
            check_pairing(abu_change_of_basis(4, spec))
        with self.assertRaises(FieldError):
            check_pairing(SparseMatrix.identity(f, 2))
        i = f.sqrt_minus_one()
        # b_1 without its factor 1/2 pairs with a_1 to 2
        C = SparseMatrix.from_entries(f, 2, 2, [(0, 0, 1), (1, 0, f.neg(i)), (0, 1, 1), (1, 1, i)])
        with self.assertRaises(FieldError):
            check_pairing(C)

    def test_raising_operators_are_skew(self):
        for N in (3, 4):
            for R in raising_operators(N, QQ_I):
                self.assertEqual(R.transpose(), R.scale(-1))

    def test_far_right(self):
        S = far_right_subset((2, 1), 3, 3)
        self.assertEqual(S.rows(), ((2, 3), (3,), ()))
        with self.assertRaises(CombinatoricsError):
            far_right_subset((4,), 3, 3)
