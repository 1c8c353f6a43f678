from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from webs_app.brauer import (ColoredBrauerDiagram, LoopParams, brauer_gram, brauer_to_web, brauer_trace,
                             cap_diagram, compose_brauer, crossing_diagram, cup_diagram, enumerate_brauer,
                             evaluate_closed_brauer)
from webs_app.evalfun import evaluate
from webs_app.exceptions import BoundaryMismatch, WebsError
from webs_app.scalars import FieldSpec, QQ, make_field

PARAMS = LoopParams((2, 5))
LOWER = enumerate_brauer((0, 0), (0, 0, 1, 1))
MIDDLE = enumerate_brauer((0, 0, 1, 1), (0, 0, 1, 1))
UPPER = enumerate_brauer((0, 0, 1, 1), (1, 1))


class DiagramTests(SimpleTestCase):
    def test_validation(self):
        with self.assertRaises(BoundaryMismatch):
            ColoredBrauerDiagram((0,), (0,), (0, 0))
        with self.assertRaises(BoundaryMismatch):
            ColoredBrauerDiagram((0,), (1,), (1, 0))
        with self.assertRaises(BoundaryMismatch):
            ColoredBrauerDiagram.from_pairs((0, 0), (0, 0), [(0, 2)])

    def test_counts(self):
        self.assertEqual(len(enumerate_brauer((0, 0), (0, 0))), 3)
        self.assertEqual(len(enumerate_brauer((0, 1), (0, 1))), 1)
        self.assertEqual(len(enumerate_brauer((0, 1), (1, 0))), 1)
        self.assertEqual(len(enumerate_brauer((0, 0, 0, 0), ())), 3)
        self.assertEqual(enumerate_brauer((0,), (1,)), [])

    def test_json(self):
        self.assertEqual(crossing_diagram(0, 1).to_json(), {'bottom': [0, 1], 'top': [1, 0], 'pairs': [[0, 3], [1, 2]]})


class CompositionTests(SimpleTestCase):
    def test_circle(self):
        self.assertEqual(evaluate_closed_brauer([cup_diagram(0), cap_diagram(0)], LoopParams((3,))), 3)
        self.assertEqual(evaluate_closed_brauer([cup_diagram(1), cap_diagram(1)], PARAMS), 5)

    def test_identity_is_neutral(self):
        ident = ColoredBrauerDiagram.identity((0, 0, 1, 1))
        for d in LOWER:
            self.assertEqual(compose_brauer(ident, d, PARAMS), (1, d))

    def test_boundary_mismatch(self):
        with self.assertRaises(BoundaryMismatch):
            compose_brauer(cap_diagram(1), cup_diagram(0), PARAMS)
        with self.assertRaises(BoundaryMismatch):
            evaluate_closed_brauer([cup_diagram(0)], PARAMS)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(LOWER), st.sampled_from(MIDDLE), st.sampled_from(UPPER))
    def test_associative(self, f, g, h):
        s1, gf = compose_brauer(g, f, PARAMS)
        s2, left = compose_brauer(h, gf, PARAMS)
        t1, hg = compose_brauer(h, g, PARAMS)
        t2, right = compose_brauer(hg, f, PARAMS)
        self.assertEqual(left, right)
        self.assertEqual(s1 * s2, t1 * t2)

    def test_trace(self):
        self.assertEqual(brauer_trace(ColoredBrauerDiagram.identity((0, 1)), PARAMS), 10)
        self.assertEqual(brauer_trace(crossing_diagram(0, 0), PARAMS), 2)


class GramTests(SimpleTestCase):
    def test_two_strands(self):
        G = brauer_gram((0, 0), (0, 0), LoopParams((2,)))
        rows = [[G.entry(r, c) for c in range(3)] for r in range(3)]
        self.assertEqual(rows, [[4, 2, 2], [2, 4, 2], [2, 2, 4]])

    def test_digit_parameters(self):
        params = LoopParams.digits(3, 4)
        self.assertEqual(params.values, (1, 1))
        self.assertEqual(params.spec, FieldSpec(3))
        self.assertEqual(LoopParams.digits(3, 4, colors=3).values, (1, 1, 0))
        with self.assertRaises(WebsError):
            params.d(5)

    def test_parse(self):
        self.assertEqual(LoopParams.parse('1/2, 3').values, (make_field(QQ).parse('1/2'), 3))
        with self.assertRaises(WebsError):
            LoopParams.parse('x')


class FunctorTests(SimpleTestCase):
    """Brauer strands of color i go to web strands labelled k_i with d_i = C(N, k_i)."""

    labels = {0: 1, 1: 2}
    params = LoopParams((3, 3))

    def test_composition_is_preserved(self):
        N = 3
        for f in enumerate_brauer((0, 1), (0, 0, 1, 0)):
            for g in enumerate_brauer((0, 0, 1, 0), (1, 0)):
                s, gf = compose_brauer(g, f, self.params)
                lhs = evaluate(brauer_to_web(g, self.labels), N) @ evaluate(brauer_to_web(f, self.labels), N)
                self.assertEqual(lhs, evaluate(brauer_to_web(gf, self.labels), N).scale(s))

    def test_missing_label(self):
        with self.assertRaises(WebsError):
            brauer_to_web(cup_diagram(2), self.labels)
