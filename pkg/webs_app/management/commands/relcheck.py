# webs_app/management/commands/relcheck.py
import json
import logging

from django.core.management.base import CommandError

from webs_app.catalog import DEFAULT_PATH, load_catalog, validate_catalog
from webs_app.cli import ReportCommand, field_spec, int_list, webs_setting
from webs_app.suite import full_suite, relation_jobs, run_jobs, summarize

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = ("Check web relations under evaluation. Use --relation for one relation, "
            "--suite full for the complete battery, --list for the catalog.")
    name = 'relcheck'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--relation', help='Relation id from the catalog')
        parser.add_argument('--params', help='JSON object with one instance; default is every instance')
        parser.add_argument('--suite', choices=['full'])
        parser.add_argument('--list', action='store_true', help='Print the relation catalog')
        parser.add_argument('--N', help='Comma separated values of N')
        parser.add_argument('--field', help='Comma separated field specs (q, q(i), p, p(i))')
        parser.add_argument('--all-labels', action='store_true', help='Include instances with zero labels')
        parser.add_argument('--a-max', type=int, help='Largest divided power in ladder relations')
        parser.add_argument('--m', help='Comma separated m values for the idempotented families')
        parser.add_argument('--workers', type=int, help='Worker processes (default from settings)')

    def catalog(self):
        entries, issues = validate_catalog(load_catalog(webs_setting('CATALOG_PATH', DEFAULT_PATH)))
        if issues:
            logger.warning('catalog has %s issue(s)', len(issues))
        return entries

    def run(self, **options):
        if options['list']:
            return [{'id': e['id'], 'name': e.get('name', ''), 'family': e.get('family'), 'params': e['params'],
                     'statement': e.get('statement', '')} for e in self.catalog()]
        Ns = int_list(options['N']) if options['N'] else tuple(webs_setting('SUITE_N', [2, 3, 4]))
        a_max = options['a_max'] if options['a_max'] is not None else webs_setting('UDOT_A_MAX', 2)
        m_values = int_list(options['m']) if options['m'] else tuple(webs_setting('UDOT_M', [2, 3]))
        workers = options['workers'] if options['workers'] is not None else webs_setting('WORKERS', 1)

        if options['suite']:
            fields = self.fields(options['field'], webs_setting('SUITE_FIELDS', ['q', '3', '5']))
            jobs = full_suite(Ns, fields, a_max=a_max, m_values=m_values, catalog=self.catalog())
            logger.info('full suite: %s checks on %s worker(s)', len(jobs), workers)
            records = run_jobs(jobs, workers=workers)
            return records + [{'summary': row} for row in summarize(records)]

        if not options['relation']:
            raise CommandError('give --relation ID, --suite full or --list', returncode=2)
        fields = self.fields(options['field'], ['q'])
        if options['params']:
            try:
                params = json.loads(options['params'])
            except ValueError as exc:
                raise CommandError(f'--params is not JSON: {exc}', returncode=2)
            jobs = [('relation', options['relation'], params, N, label) for N in Ns for label in fields]
        else:
            jobs = relation_jobs([options['relation']], Ns, fields, all_labels=options['all_labels'],
                                 a_max=a_max, m_values=m_values)
        return run_jobs(jobs, workers=workers)

    def fields(self, text, default):
        labels = [x.strip() for x in text.split(',')] if text else list(default)
        return [field_spec(label).label for label in labels]
