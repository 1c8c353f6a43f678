# webs_app/management/commands/weights.py
from django.core.management.base import CommandError

from webs_app.cli import ReportCommand, check_record, int_list
from webs_app.combin import (OWeight, composition_to_so_weight, dagger, dagger_reverses_order, dagger_table,
                             dominance_covers, o_order_less, o_weights, p_adic_digits, partitions_in_box)


class Command(ReportCommand):
    help = "Weight dictionary: the dagger bijection, the O(N) and dominance orders, base-p digits."
    name = 'weights'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['dagger', 'orders', 'digits', 'dominance'])
        parser.add_argument('--N', type=int, required=True)
        parser.add_argument('--m', type=int, default=2)
        parser.add_argument('--p', type=int)
        parser.add_argument('--all', action='store_true', help='Print the whole dagger table')
        parser.add_argument('--partition', help='One O(N) weight as a partition, e.g. 2,1')

    def run(self, **options):
        action, N, m = options['action'], options['N'], options['m']
        if action == 'digits':
            if options['p'] is None:
                raise CommandError('digits needs --p', returncode=2)
            digits = p_adic_digits(N, options['p'])
            return [{'N': N, 'p': options['p'], 'digits': list(digits.digits)}]
        if action == 'dagger':
            if options['partition'] is not None:
                lam = OWeight.from_partition(int_list(options['partition']), N)
                return [self.row(lam, dagger(lam, m), m)]
            if not options['all']:
                raise CommandError('dagger needs --all or --partition', returncode=2)
            return [self.row(lam, K, m) for lam, K in dagger_table(N, m)]
        if action == 'dominance':
            # Hasse covers among the partitions of N; here --N is the size
            family = [Y for Y in partitions_in_box(N, N) if sum(Y) == N]
            return [{'below': list(a), 'above': list(b)} for a, b in dominance_covers(family)]
        weights = o_weights(N, m)
        pairs = [{'less': lam.to_json(), 'greater': mu.to_json()}
                  for lam in weights for mu in weights if o_order_less(lam, mu)]
        return pairs + [check_record({'check': 'dagger_reverses_order', 'N': N, 'm': m},
                                      dagger_reverses_order(N, m))]

    @staticmethod
    def row(lam, K, m):
        return {'m': m, 'weight': lam.to_json(), 'dagger': list(K.entries),
                'so_halves': list(composition_to_so_weight(K).halves)}
