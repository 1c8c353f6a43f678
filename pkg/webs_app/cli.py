# webs_app/cli.py
"""
Shared plumbing for the management commands: field and list parsing, JSON-lines
emission, CheckRun persistence and the exit code convention (1 when a check
fails, 2 for usage and domain errors).
"""
import json
import logging
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from .exceptions import WebsError
from .scalars import FieldSpec
from .suite import report_line

logger = logging.getLogger(__name__)


def webs_setting(name, default=None):
    return getattr(settings, 'WEBS', {}).get(name, default)


def int_list(text):
    """'1,2,3' -> (1, 2, 3); the empty string is the empty tuple."""
    try:
        return tuple(int(x) for x in str(text).split(',') if x.strip())
    except ValueError:
        raise CommandError(f'expected comma separated integers, got {text!r}', returncode=2)


def check_record(base, ok, **extra):
    """A report record: the identifying fields, any measured values and the verdict."""
    return {**base, **extra, 'pass': bool(ok)}


def field_spec(text):
    try:
        return FieldSpec.parse(text)
    except WebsError as exc:
        raise CommandError(str(exc), returncode=2)


class ReportCommand(BaseCommand):
    """
    Subclasses implement run(**options) returning a list of records (dicts with
    a 'pass' key where they are checks). Records are printed one JSON object
    per line in the order returned.
    """
    name = ''

    def add_arguments(self, parser):
        parser.add_argument('--save', action='store_true', help='Store the report as a CheckRun')
        parser.add_argument('--timings', action='store_true', help='Include elapsed seconds in report lines')

    def run(self, **options):
        raise NotImplementedError

    def format_record(self, record, timings=False):
        return report_line(record, timings)

    def handle(self, *args, **options):
        start = time.perf_counter()
        try:
            records = self.run(**options)
        except WebsError as exc:
            raise CommandError(str(exc), returncode=2)
        elapsed = time.perf_counter() - start
        for record in records:
            self.stdout.write(self.format_record(record, options['timings']))
        if options['save']:
            self.save(records, options, elapsed)
        failed = [r for r in records if r.get('pass') is False]
        if failed:
            self.stdout.write(json.dumps({'failing': failed[0]}, sort_keys=True, default=str))
            raise CommandError(f'{len(failed)} of {len(records)} checks failed', returncode=1)

    def save(self, records, options, elapsed):
        from .models import CheckRun

        skip = {'save', 'timings', 'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color',
                'force_color', 'skip_checks', 'stdout', 'stderr'}
        params = {k: v for k, v in options.items() if k not in skip}
        safe = json.loads(json.dumps({'params': params, 'records': records}, default=str))
        run = CheckRun.record(self.name, safe['params'], safe['records'], elapsed=elapsed)
        logger.info('saved %s', run)
