# webs_app/management/commands/render.py
from pathlib import Path

from django.core.management.base import CommandError

from webs_app.cli import ReportCommand
from webs_app.render import render_svg
from webs_app.webcat import diagram_from_json


class Command(ReportCommand):
    help = "Render a web diagram (JSON) as an SVG file."
    name = 'render'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--diagram', required=True)
        parser.add_argument('--out', required=True)

    def run(self, **options):
        try:
            d = diagram_from_json(Path(options['diagram']).read_text())
            svg = render_svg(d)
            Path(options['out']).write_text(svg)
        except OSError as exc:
            raise CommandError(str(exc), returncode=2)
        return [{'out': options['out'], 'source': list(d.source), 'target': list(d.target), 'bytes': len(svg)}]
