# webs_app/management/commands/howe.py
from django.core.management.base import CommandError

from webs_app import howe
from webs_app.cli import ReportCommand, check_record, field_spec, int_list, webs_setting
from webs_app.relations import check_udot_relations
from webs_app.scalars import QQ_I

ACTIONS = ('agree', 'commute', 'enddim', 'udot', 'hw', 'weights', 'divided', 'span', 'faithful')


class Command(ReportCommand):
    help = "Skew Howe duality checks between the so_2m ladder action and the O(N) action."
    name = 'howe'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=ACTIONS)
        parser.add_argument('--N', type=int, required=True)
        parser.add_argument('--m', type=int, default=2)
        parser.add_argument('--field', default='q')
        parser.add_argument('--a-max', type=int, help='Largest divided power (udot, divided)')
        parser.add_argument('--K', help='Source labels for span and faithful, e.g. 1,1')
        parser.add_argument('--L', help='Target labels for span and faithful')
        parser.add_argument('--samples', type=int, default=200)
        parser.add_argument('--seed', type=int, default=0)

    def run(self, **options):
        action, N, m = options['action'], options['N'], options['m']
        spec = field_spec(options['field'])
        base = {'check': action, 'N': N, 'm': m, 'field': spec.label}
        a_max = options['a_max'] if options['a_max'] is not None else webs_setting('UDOT_A_MAX', 2)

        if action == 'agree':
            return [check_record(base, howe.actions_agree(N, m, spec))]
        if action == 'commute':
            return [check_record(base, howe.commutant_check(N, m, spec))]
        if action == 'weights':
            return [check_record(base, howe.weight_space_check(N, m, spec))]
        if action == 'hw':
            spec = spec if spec.has_i else QQ_I
            return [check_record(base, howe.hw_vector_check(N, m, spec), field=spec.label)]
        if action == 'divided':
            return [check_record(base, howe.divided_power_check(N, m, a, spec), a=a) for a in range(2, a_max + 1)]
        if action == 'enddim':
            webs, predicted = howe.end_dim_by_webs(N, m, spec), howe.end_dim_prediction(N, m)
            return [check_record(base, webs == predicted, webs=webs, predicted=predicted)]
        if action == 'udot':
            report = check_udot_relations(m, N, a_max, spec)
            return [check_record(base, report['pass'], a_max=a_max, families=report['families'],
                                 failures=report['failures'])]

        if options['K'] is None or options['L'] is None:
            raise CommandError(f'howe {action} needs --K and --L', returncode=2)
        K, L = int_list(options['K']), int_list(options['L'])
        base = {'check': action, 'N': N, 'K': list(K), 'L': list(L), 'field': spec.label}
        if action == 'span':
            ok = howe.spanning_check(K, L, N, samples=options['samples'], seed=options['seed'], spec=spec)
            return [check_record(base, ok, samples=options['samples'])]
        webs = howe.fmf_rank(K, L, N)
        oracle = howe.commutant_dimension(K, L, N)
        ok = webs == oracle
        if sum(K) == sum(L):
            ok = ok and howe.type_a_faithfulness_check(K, L, N)
        return [check_record(base, ok, field='q', webs=webs, commutant=oracle)]
