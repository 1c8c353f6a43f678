# webs_app/management/commands/eval.py
from pathlib import Path

from django.core.management.base import CommandError

from webs_app.cli import ReportCommand, field_spec
from webs_app.evalfun import evaluate
from webs_app.webcat import morphism_from_json


class Command(ReportCommand):
    help = "Evaluate a web diagram or morphism (JSON) to its matrix; closed diagrams print their scalar."
    name = 'eval'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--diagram', required=True, help='Path to a diagram or morphism JSON file')
        parser.add_argument('--N', type=int, required=True)
        parser.add_argument('--field', default='q')

    def run(self, **options):
        try:
            text = Path(options['diagram']).read_text()
        except OSError as exc:
            raise CommandError(f"cannot read {options['diagram']}: {exc}", returncode=2)
        morphism = morphism_from_json(text)
        matrix = evaluate(morphism, options['N'], field_spec(options['field']))
        if not morphism.source and not morphism.target:
            return [{'scalar': matrix.field.format(matrix.entry(0, 0))}]
        return [{'source': list(morphism.source), 'target': list(morphism.target), 'matrix': matrix.to_json()}]

    def format_record(self, record, timings=False):
        if 'scalar' in record:
            return record['scalar']
        return super().format_record(record, timings)
