import os
import tempfile

import yaml
from django.test import SimpleTestCase

from webs_app.catalog import enabled_ids, load_catalog, main, merge_catalogs, validate_catalog
from webs_app.exceptions import CatalogError
from webs_app.relations import RELATIONS


class CatalogTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(text)
        return path

    def test_shipped_catalog_matches_builders(self):
        entries, issues = validate_catalog(load_catalog())
        self.assertEqual(issues, [])
        self.assertEqual({e['id'] for e in entries}, set(RELATIONS))
        self.assertEqual(sorted(enabled_ids(entries)), sorted(RELATIONS))

    def test_family_filter(self):
        entries, _ = validate_catalog(load_catalog())
        self.assertIn('CircleRemoval', enabled_ids(entries, 'orthogonal'))
        self.assertNotIn('CircleRemoval', enabled_ids(entries, 'type_a'))

    def test_issues(self):
        entries = [
            {'id': 'Digon', 'name': 'Digon', 'family': 'orthogonal', 'params': ['k', 'l']},
            {'id': 'Digon', 'name': 'again', 'family': 'type_a', 'params': ['k', 'l']},
            {'id': 'Mystery', 'family': 'type_a'},
            {'name': 'no id'},
            {'id': 'Assoc', 'name': 'Assoc', 'family': 'type_a', 'params': ['k'], 'enabled': 'yes'},
        ]
        normalized, issues = validate_catalog(entries)
        text = '\n'.join(issues)
        self.assertIn('duplicate id Digon', text)
        self.assertIn('family orthogonal but builder says type_a', text)
        self.assertIn('Mystery has no builder', text)
        self.assertIn('Mystery missing name', text)
        self.assertIn('relation[3] missing id', text)
        self.assertIn("params ['k'] but builder takes", text)
        self.assertIn('enabled must be true or false', text)
        self.assertIn('builder Exterior has no catalog entry', text)
        self.assertTrue(normalized[-1]['enabled'])

    def test_disabled_entries_are_skipped(self):
        entries = [{'id': 'Digon', 'enabled': False}, {'id': 'Assoc'}, {'id': 'Mystery'}]
        self.assertEqual(enabled_ids(entries), ['Assoc'])

    def test_load_wrapped_and_json(self):
        path = self.write('wrapped.yaml', yaml.safe_dump({'relations': [{'id': 'Digon'}]}))
        self.assertEqual(load_catalog(path), [{'id': 'Digon'}])
        path = self.write('plain.json', '[{"id": "Assoc"}]')
        self.assertEqual(load_catalog(path), [{'id': 'Assoc'}])

    def test_load_errors(self):
        with self.assertRaises(CatalogError):
            load_catalog(os.path.join(self.tmp.name, 'missing.yaml'))
        with self.assertRaises(CatalogError):
            load_catalog(self.write('scalar.yaml', 'just a string'))

    def test_merge_overrides_by_id(self):
        merged = merge_catalogs([{'id': 'B', 'v': 1}, {'id': 'A'}], [{'id': 'B', 'v': 2}, {'nope': 1}])
        self.assertEqual(merged, [{'id': 'A'}, {'id': 'B', 'v': 2}])

    def test_validate_command(self):
        self.assertEqual(main([]), 2)
        self.assertEqual(main(['validate', self.write('bad.yaml', '- id: Mystery\n')]), 1)
        self.assertEqual(main(['validate', os.path.join(self.tmp.name, 'missing.yaml')]), 1)
