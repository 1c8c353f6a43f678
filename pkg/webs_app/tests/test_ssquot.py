from django.test import SimpleTestCase

from webs_app.brauer import LoopParams
from webs_app.evalfun import evaluate
from webs_app.exceptions import BoundaryMismatch, WebsError
from webs_app.scalars import FieldSpec, make_field
from webs_app.ssquot import (categorical_trace, circle_digit_check, gram_matrix, hom_basis,
                             merge_split_negligibility, negligible_morphisms, ss_brauer_dim, ss_hom_dim,
                             verlinde_crosscheck)
from webs_app.webcat import WebMorphism, compose, digon, enumerate_fmf, ident, merge


class TraceTests(SimpleTestCase):
    def test_identity_trace_is_dimension(self):
        self.assertEqual(categorical_trace(ident(1), 3), 3)
        self.assertEqual(categorical_trace(ident(1, 2), 3), 9)
        self.assertEqual(categorical_trace(digon(1, 1), 3), 6)

    def test_closure_is_matrix_trace(self):
        for d in enumerate_fmf((1, 1), (1, 1)) + enumerate_fmf((2, 1), (2, 1)):
            self.assertEqual(categorical_trace(WebMorphism.of(d), 3), evaluate(d, 3).trace(), str(d))

    def test_trace_needs_endomorphism(self):
        with self.assertRaises(BoundaryMismatch):
            categorical_trace(merge(1, 1), 3)


class HomSpaceTests(SimpleTestCase):
    def test_basis_rank(self):
        space = hom_basis((1, 1), (1, 1), 3)
        self.assertEqual(space.rank, 3)
        self.assertEqual(len(space.basis_diagrams()), 3)
        self.assertEqual(hom_basis((1, 1), (1, 1), 1).rank, 1)

    def test_gram_over_the_rationals_is_nondegenerate(self):
        G = gram_matrix((1, 1), (1, 1), 3)
        self.assertEqual(G.shape, (3, 3))
        self.assertEqual(ss_hom_dim((1, 1), (1, 1), 3), 3)


class SemisimplificationTests(SimpleTestCase):
    def test_vanishing_endomorphisms(self):
        self.assertEqual(ss_hom_dim((2,), (2,), 4, 3), 0)
        self.assertEqual(ss_hom_dim((1,), (1,), 4, 3), 1)

    def test_negligible_identity(self):
        radical = negligible_morphisms((2,), (2,), 4, 3)
        self.assertEqual(len(radical), 1)
        self.assertEqual((radical[0].source, radical[0].target), ((2,), (2,)))

    def test_negligibles_form_an_ideal(self):
        spec = FieldSpec(3)
        f = make_field(spec)
        radical = negligible_morphisms((2,), (2,), 4, 3)
        self.assertTrue(radical)
        for L in ((2,), (1, 1)):
            outward = [WebMorphism.of(d) for d in enumerate_fmf((2,), L)]
            inward = [WebMorphism.of(d) for d in enumerate_fmf(L, (2,))]
            for n in radical:
                for g in outward:
                    M = evaluate(compose(g, n), 4, spec)
                    for h in inward:
                        self.assertTrue(f.is_zero((evaluate(h, 4, spec) @ M).trace()), (L, str(g), str(h)))
                for h in inward:
                    M = evaluate(compose(n, h), 4, spec)
                    for g in outward:
                        self.assertTrue(f.is_zero((evaluate(g, 4, spec) @ M).trace()), (L, str(g), str(h)))

    def test_circle_digits(self):
        for i, p, N in ((0, 3, 4), (1, 3, 4), (1, 3, 5), (0, 5, 7), (1, 5, 6)):
            self.assertTrue(circle_digit_check(i, p, N), (i, p, N))

    def test_merge_and_split_are_negligible(self):
        for a, b, i, p, N in ((1, 2, 1, 3, 4), (2, 1, 1, 3, 4), (1, 2, 1, 3, 5), (2, 3, 1, 5, 6)):
            self.assertTrue(merge_split_negligibility(a, b, i, p, N), (a, b, i, p, N))
        with self.assertRaises(WebsError):
            merge_split_negligibility(1, 1, 1, 3, 4)


class VerlindeTests(SimpleTestCase):
    def test_words_agree(self):
        for p, N in ((3, 4), (3, 5)):
            for word in ((), (0,), (0, 0), (1,), (0, 1), (1, 1)):
                self.assertTrue(verlinde_crosscheck(word, p, N), (word, p, N))

    def test_brauer_side(self):
        params = LoopParams.digits(3, 4)
        self.assertEqual(ss_brauer_dim((0, 0), (0, 0), params), 1)
        self.assertEqual(ss_brauer_dim((0, 0), (0, 0), LoopParams.digits(3, 5)), 3)
        self.assertEqual(ss_brauer_dim((0, 1), (1, 0), params), 1)
        self.assertEqual(ss_brauer_dim((0,), (0,), LoopParams.digits(3, 3)), 0)

    def test_mixed_words(self):
        self.assertTrue(verlinde_crosscheck((0, 1), 3, 4, target_word=(1, 0)))
        self.assertTrue(verlinde_crosscheck((0, 0), 3, 4, target_word=()))
