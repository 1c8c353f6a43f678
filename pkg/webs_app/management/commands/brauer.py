# webs_app/management/commands/brauer.py
from webs_app.brauer import LoopParams, brauer_gram, enumerate_brauer
from webs_app.cli import ReportCommand, field_spec, int_list
from webs_app.matrices import matrix_rank


class Command(ReportCommand):
    help = "Colored Brauer category: the diagram basis of a Hom space or its trace pairing."
    name = 'brauer'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['gram', 'enumerate'])
        parser.add_argument('--word', required=True, help='Colors of the source points, e.g. 0,0')
        parser.add_argument('--target-word', help='Colors of the target points (default: --word)')
        parser.add_argument('--params', default='', help='Loop values d0,d1,... (gram only)')
        parser.add_argument('--field', default='q')

    def run(self, **options):
        word = int_list(options['word'])
        target = int_list(options['target_word']) if options['target_word'] is not None else word
        if options['action'] == 'enumerate':
            return [d.to_json() for d in enumerate_brauer(word, target)]
        spec = field_spec(options['field'])
        params = LoopParams.parse(options['params'], spec)
        G = brauer_gram(word, target, params)
        return [{'word': list(word), 'target_word': list(target), 'params': [G.field.format(v) for v in params.values],
                 'field': spec.label, 'rank': matrix_rank(G), 'gram': G.to_json()}]
