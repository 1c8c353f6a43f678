import json

from django.test import TestCase
from django.urls import reverse

from webs_app.forms import EXAMPLE
from webs_app.models import CheckRun


class EvaluateViewTests(TestCase):
    def setUp(self):
        self.url = reverse('webs_app:evaluate')

    def test_get_shows_usage(self):
        resp = self.client.get(self.url)
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()['example'], EXAMPLE)

    def test_root_redirects(self):
        resp = self.client.get('/')
        self.assertRedirects(resp, self.url)

    def test_closed_diagram(self):
        resp = self.client.post(self.url, {'diagram': EXAMPLE, 'N': 4})
        self.assertEqual(resp.status_code, 200)
        data = resp.json()
        self.assertEqual(data['scalar'], '4')
        self.assertEqual(data['matrix'], {'rows': 1, 'cols': 1, 'entries': [[0, 0, '4']]})
        run = CheckRun.objects.get(id=data['run_id'])
        self.assertEqual((run.command, run.params['field'], run.status), ('eval', 'q', 'pass'))

    def test_gaussian_field(self):
        diagram = json.dumps({'source': [1, 1], 'slices': [{'kind': 'merge', 'k': 1, 'l': 1}]})
        resp = self.client.post(self.url, {'diagram': diagram, 'N': 2, 'field': 'q(i)'})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()['target'], [2])
        self.assertNotIn('scalar', resp.json())

    def test_invalid_input(self):
        for payload in ({'diagram': '{oops', 'N': 3}, {'diagram': EXAMPLE, 'N': 0},
                        {'diagram': EXAMPLE, 'N': 3, 'field': '6'},
                        {'diagram': json.dumps({'source': [2], 'slices': [{'kind': 'cap', 'k': 1}]}), 'N': 3}):
            resp = self.client.post(self.url, payload)
            self.assertEqual(resp.status_code, 400, payload)
            self.assertFalse(resp.json()['ok'])
        self.assertFalse(CheckRun.objects.exists())


class RenderViewTests(TestCase):
    def test_svg(self):
        resp = self.client.post(reverse('webs_app:render'), {'diagram': EXAMPLE})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp['Content-Type'], 'image/svg+xml')
        self.assertIn(b'<svg', resp.content)

    def test_bad_diagram(self):
        resp = self.client.post(reverse('webs_app:render'), {'diagram': '[]'})
        self.assertEqual(resp.status_code, 400)
