# webs_app/management/commands/ss.py
from django.core.management.base import CommandError

from webs_app import ssquot
from webs_app.cli import ReportCommand, check_record, int_list
from webs_app.scalars import FieldSpec
from webs_app.webcat import morphism_to_json


class Command(ReportCommand):
    help = "Semisimplification over F_p: Hom dimensions, negligible merges and splits, Brauer comparison."
    name = 'ss'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['dim', 'negligible-merge', 'crosscheck', 'circle', 'radical'])
        parser.add_argument('--N', type=int, required=True)
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--K', help='Source labels (dim, radical)')
        parser.add_argument('--L', help='Target labels (dim, radical; default --K)')
        parser.add_argument('--a', type=int)
        parser.add_argument('--b', type=int)
        parser.add_argument('--i', type=int, default=1)
        parser.add_argument('--word', help='Digit positions, e.g. 0,1 for labels 1,p (crosscheck)')
        parser.add_argument('--target-word')

    def run(self, **options):
        action, N, p = options['action'], options['N'], options['p']
        FieldSpec(p)  # rejects p = 2 and non-primes before any work
        base = {'check': action, 'N': N, 'p': p}
        if action == 'circle':
            return [check_record(base, ssquot.circle_digit_check(options['i'], p, N), i=options['i'])]
        if action == 'negligible-merge':
            a, b = options['a'], options['b']
            if a is None or b is None:
                raise CommandError('negligible-merge needs --a and --b', returncode=2)
            ok = ssquot.merge_split_negligibility(a, b, options['i'], p, N)
            return [check_record(base, ok, a=a, b=b, i=options['i'])]
        if action == 'crosscheck':
            if options['word'] is None:
                raise CommandError('crosscheck needs --word', returncode=2)
            word = int_list(options['word'])
            target = int_list(options['target_word']) if options['target_word'] is not None else word
            ok = ssquot.verlinde_crosscheck(word, p, N, target)
            return [check_record(base, ok, word=list(word), target_word=list(target))]
        if options['K'] is None:
            raise CommandError(f'{action} needs --K', returncode=2)
        K = int_list(options['K'])
        L = int_list(options['L']) if options['L'] is not None else K
        base.update(K=list(K), L=list(L))
        if action == 'dim':
            return [dict(base, dim=ssquot.ss_hom_dim(K, L, N, p))]
        return [dict(base, morphism=morphism_to_json(f)) for f in ssquot.negligible_morphisms(K, L, N, p)]
