from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import I
from sympy.polys import domains

from webs_app.matrices import (Echelon, SparseMatrix, direct_sum, domain_bridge, in_span, independent_subset,
                               matrix_rank, null_space, nullity)
from webs_app.scalars import FieldSpec, QQ, QQ_I, make_field


def dense(field, rows):
    return SparseMatrix.from_entries(field, len(rows), len(rows[0]),
                                     ((r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row)))


small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n)))


class SparseMatrixTests(SimpleTestCase):
    def setUp(self):
        self.f = make_field(QQ)

    def test_zero_entries_not_stored(self):
        A = dense(self.f, [[0, 1], [0, 0]])
        self.assertEqual(A.nnz, 1)
        self.assertTrue(dense(self.f, [[0, 0]]).is_zero())

    def test_product_and_identity(self):
        A = dense(self.f, [[1, 2], [3, 4]])
        B = dense(self.f, [[0, 1], [1, 0]])
        self.assertEqual(A @ B, dense(self.f, [[2, 1], [4, 3]]))
        self.assertEqual(SparseMatrix.identity(self.f, 2) @ A, A)
        with self.assertRaises(ValueError):
            A @ dense(self.f, [[1, 2, 3]])

    def test_kron_left_factor_slowest(self):
        A = dense(self.f, [[1, 2], [3, 4]])
        B = dense(self.f, [[0, 5], [6, 7]])
        K = A.kron(B)
        self.assertEqual(K.shape, (4, 4))
        for r1 in range(2):
            for c1 in range(2):
                for r2 in range(2):
                    for c2 in range(2):
                        self.assertEqual(K.entry(r1 * 2 + r2, c1 * 2 + c2), A.entry(r1, c1) * B.entry(r2, c2))

    def test_embed(self):
        A = dense(self.f, [[1, 2], [3, 4]])
        I3 = SparseMatrix.identity(self.f, 3)
        self.assertEqual(A.embed(3, 1), I3.kron(A))
        self.assertEqual(A.embed(1, 3), A.kron(I3))

    def test_inverse(self):
        A = dense(self.f, [[2, 1], [1, 1]])
        self.assertEqual(A.inverse(), dense(self.f, [[1, -1], [-1, 2]]))
        with self.assertRaises(ZeroDivisionError):
            dense(self.f, [[1, 2], [2, 4]]).inverse()

    def test_trace_and_direct_sum(self):
        A = dense(self.f, [[1, 2], [3, 4]])
        S = direct_sum(self.f, [A, SparseMatrix.identity(self.f, 3)])
        self.assertEqual(S.shape, (5, 5))
        self.assertEqual(S.trace(), 8)
        self.assertEqual(S.entry(0, 2), 0)

    def test_to_json(self):
        A = dense(self.f, [[0, 1], [1, 0]]).scale(self.f.coerce(1) / 2)
        self.assertEqual(A.to_json(), {'rows': 2, 'cols': 2, 'entries': [[1, 0, '1/2'], [0, 1, '1/2']]})


class RankTests(SimpleTestCase):
    def test_rank_depends_on_characteristic(self):
        rows = [[1, 1], [1, -2]]
        self.assertEqual(matrix_rank(dense(make_field(QQ), rows)), 2)
        self.assertEqual(matrix_rank(dense(make_field(FieldSpec(3)), rows)), 1)

    def test_gaussian_entries(self):
        f = make_field(QQ_I)
        i = f.coerce((0, 1))
        A = SparseMatrix.from_entries(f, 2, 2, [(0, 0, 1), (0, 1, i), (1, 0, i), (1, 1, -1)])
        self.assertEqual(matrix_rank(A), 1)
        self.assertEqual(nullity(A), 1)

    def test_echelon_membership(self):
        f = make_field(QQ)
        ech = Echelon(f)
        self.assertTrue(ech.add({0: 1, 1: 2}))
        self.assertFalse(ech.add({0: 2, 1: 4}))
        self.assertTrue(ech.contains({0: -3, 1: -6}))
        self.assertFalse(ech.contains({1: 1}))
        self.assertEqual(ech.rank, 1)

    def test_independent_subset(self):
        f = make_field(QQ)
        vectors = [{0: 1}, {0: 2}, {1: 1}, {0: 1, 1: 1}]
        self.assertEqual(independent_subset(vectors, f), [0, 2])
        self.assertTrue(in_span({0: 5, 1: -1}, vectors, f))
        self.assertFalse(in_span({2: 1}, vectors, f))

    @settings(max_examples=80, deadline=None)
    @given(small_matrices, st.sampled_from([QQ, FieldSpec(5), FieldSpec(3), QQ_I, FieldSpec(3, True)]))
    def test_rank_nullity(self, rows, spec):
        f = make_field(spec)
        A = dense(f, rows)
        kernel = null_space(A)
        self.assertEqual(matrix_rank(A) + len(kernel), A.ncols)
        self.assertEqual(matrix_rank(A), matrix_rank(A.transpose()))
        for x in kernel:
            self.assertEqual(A.apply(x), {})


class DomainTests(SimpleTestCase):
    def test_sympy_domains(self):
        self.assertEqual(domain_bridge(make_field(QQ)).domain, domains.QQ)
        self.assertEqual(domain_bridge(make_field(FieldSpec(5))).domain, domains.GF(5))
        self.assertEqual(domain_bridge(make_field(QQ_I)).domain, domains.QQ.algebraic_field(I))
        # 5(i) is F_5 itself; 3(i) is the quadratic extension
        self.assertEqual(domain_bridge(make_field(FieldSpec(5, True))).domain, domains.GF(5))
        self.assertIsNone(domain_bridge(make_field(FieldSpec(3, True))))

    def test_elements_come_back_as_field_elements(self):
        f = make_field(QQ_I)
        bridge = domain_bridge(f)
        x = f.parse('1/2-3i')
        self.assertEqual(bridge.from_domain(bridge.to_domain(x)), x)
        g = make_field(FieldSpec(7))
        self.assertEqual(domain_bridge(g).from_domain(domain_bridge(g).to_domain(6)), 6)

    def test_gaussian_kernel(self):
        for spec in (QQ_I, FieldSpec(3, True), FieldSpec(5)):
            f = make_field(spec)
            i = f.sqrt_minus_one()
            A = SparseMatrix.from_entries(f, 2, 2, [(0, 0, 1), (0, 1, i), (1, 0, i), (1, 1, -1)])
            kernel = null_space(A)
            self.assertEqual(len(kernel), 1, spec)
            self.assertEqual(A.apply(kernel[0]), {}, spec)
            self.assertFalse(A.apply({0: f.one}) == {}, spec)

    def test_greedy_subset_over_every_backend(self):
        for spec in (QQ, QQ_I, FieldSpec(3), FieldSpec(3, True)):
            f = make_field(spec)
            raw = [{}, {0: 1, 2: 1}, {0: 2, 2: 2}, {1: 1}, {0: 1, 1: 1, 2: 1}, {2: 1}]
            vectors = [{c: f.coerce(x) for c, x in v.items()} for v in raw]
            self.assertEqual(independent_subset(vectors, f), [1, 3, 5], spec)
            self.assertEqual(independent_subset([{}, {}], f), [], spec)
            self.assertTrue(in_span({0: f.coerce(3), 1: f.one, 2: f.coerce(3)}, vectors[:4], f), spec)
            self.assertFalse(in_span({2: f.one}, vectors[:4], f), spec)

    def test_zero_matrix_kernel_is_everything(self):
        f = make_field(FieldSpec(3))
        self.assertEqual(null_space(SparseMatrix.zeros(f, 2, 3)), [{0: 1}, {1: 1}, {2: 1}])
        self.assertEqual(matrix_rank(SparseMatrix.zeros(f, 2, 3)), 0)
