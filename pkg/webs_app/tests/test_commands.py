import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from webs_app.models import CheckRun

CIRCLE = {'source': [], 'slices': [{'kind': 'cup', 'k': 1}, {'kind': 'cap', 'k': 1}]}
MERGE = {'source': [1, 1], 'slices': [{'kind': 'merge', 'k': 1, 'l': 1}]}


def lines(out):
    return [json.loads(line) for line in out.getvalue().splitlines() if line.strip()]


class CommandTestCase(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write_json(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as fh:
            json.dump(data, fh)
        return path

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out


class EvalCommandTests(CommandTestCase):
    def test_closed_diagram_prints_scalar(self):
        out = self.call('eval', '--diagram', self.write_json('circle.json', CIRCLE), '--N', '3')
        self.assertEqual(out.getvalue().strip(), '3')

    def test_open_diagram_prints_matrix(self):
        out = self.call('eval', '--diagram', self.write_json('merge.json', MERGE), '--N', '2', '--field', '3')
        [record] = lines(out)
        self.assertEqual((record['source'], record['target']), ([1, 1], [2]))
        self.assertEqual(record['matrix']['entries'], [[0, 1, '1'], [0, 2, '2']])

    def test_errors_exit_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('eval', '--diagram', os.path.join(self.tmp.name, 'missing.json'), '--N', '3')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            self.call('eval', '--diagram', self.write_json('circle.json', CIRCLE), '--N', '3', '--field', '4')
        self.assertEqual(ctx.exception.returncode, 2)
        bad = self.write_json('bad.json', {'source': [1], 'slices': [{'kind': 'merge', 'k': 1, 'l': 1}]})
        with self.assertRaises(CommandError) as ctx:
            self.call('eval', '--diagram', bad, '--N', '3')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_save(self):
        self.call('eval', '--diagram', self.write_json('circle.json', CIRCLE), '--N', '3', '--save')
        run = CheckRun.objects.get()
        self.assertEqual((run.command, run.status, run.params['N']), ('eval', 'pass', 3))
        self.assertEqual(run.records, [{'scalar': '3'}])


class RelcheckCommandTests(CommandTestCase):
    def test_list(self):
        ids = {r['id'] for r in lines(self.call('relcheck', '--list'))}
        self.assertIn('CircleRemoval', ids)
        self.assertIn('SerreA', ids)

    def test_one_relation(self):
        records = lines(self.call('relcheck', '--relation', 'Digon', '--N', '2,3', '--field', 'q,3'))
        self.assertTrue(records)
        self.assertTrue(all(r['pass'] for r in records))
        self.assertTrue(all('elapsed' not in r for r in records))

    def test_explicit_params(self):
        [record] = lines(self.call('relcheck', '--relation', 'CircleRemoval', '--params', '{"k": 2}', '--N', '4'))
        self.assertEqual((record['params'], record['pass']), ({'k': 2}, True))

    def test_usage_errors(self):
        for args in (('relcheck',), ('relcheck', '--relation', 'Nope', '--N', '2'),
                     ('relcheck', '--relation', 'Digon', '--params', '{k'), ('relcheck', '--relation', 'Digon', '--N', 'x')):
            with self.assertRaises(CommandError) as ctx:
                self.call(*args)
            self.assertEqual(ctx.exception.returncode, 2, args)

    def test_failing_relation_exits_with_one(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('relcheck', '--relation', 'Lollipop', '--params', '{"l": 1, "a": 0}', '--N', '2',
                         stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('failing', lines(out)[-1])


class OtherCommandTests(CommandTestCase):
    def test_howe_agree(self):
        [record] = lines(self.call('howe', 'agree', '--N', '2', '--m', '2'))
        self.assertEqual((record['check'], record['pass']), ('agree', True))

    def test_howe_enddim(self):
        [record] = lines(self.call('howe', 'enddim', '--N', '1', '--m', '2', '--field', '3'))
        self.assertEqual((record['webs'], record['predicted']), (8, 8))

    def test_howe_faithful_needs_labels(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('howe', 'faithful', '--N', '2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_weights_dagger(self):
        rows = lines(self.call('weights', 'dagger', '--N', '1', '--m', '2', '--all'))
        self.assertEqual(sorted(r['dagger'] for r in rows), [[1, 0], [1, 1]])

    def test_weights_digits_and_dominance(self):
        [record] = lines(self.call('weights', 'digits', '--N', '4', '--p', '3'))
        self.assertEqual(record['digits'], [1, 1])
        self.assertEqual(len(lines(self.call('weights', 'dominance', '--N', '6'))), 12)

    def test_weights_orders(self):
        records = lines(self.call('weights', 'orders', '--N', '3', '--m', '2'))
        self.assertEqual(records[-1], {'check': 'dagger_reverses_order', 'N': 3, 'm': 2, 'pass': True})

    def test_brauer_gram(self):
        [record] = lines(self.call('brauer', 'gram', '--word', '0,0', '--params', '2'))
        self.assertEqual(record['rank'], 3)
        self.assertEqual(len(lines(self.call('brauer', 'enumerate', '--word', '0,0,0,0', '--target-word', ''))), 3)

    def test_ss(self):
        [record] = lines(self.call('ss', 'dim', '--N', '4', '--p', '3', '--K', '2'))
        self.assertEqual(record['dim'], 0)
        [record] = lines(self.call('ss', 'circle', '--N', '4', '--p', '3', '--i', '1'))
        self.assertTrue(record['pass'])
        with self.assertRaises(CommandError) as ctx:
            self.call('ss', 'dim', '--N', '4', '--p', '2', '--K', '2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_render(self):
        out_path = os.path.join(self.tmp.name, 'merge.svg')
        [record] = lines(self.call('render', '--diagram', self.write_json('merge.json', MERGE), '--out', out_path))
        with open(out_path, encoding='utf-8') as fh:
            self.assertIn('<svg', fh.read())
        self.assertEqual(record['target'], [2])
