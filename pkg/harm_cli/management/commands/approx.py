from groups.groups import GroupSpec
from harm_cli.command import EngineCommand
from harm_cli.render import approx_context, render, term_list
from harmonics.engine import frobenius_series
from universal.approx import agrees_to_degree, coinvariant_ring_series, low_degree_approx, missing_terms
from universal.frobenius import universal_frobenius


class Command(EngineCommand):
    help = 'Low-degree approximation h_n[wH]/h_n[H] of the universal Frobenius table of S_n.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--degree', type=int, required=True, help='truncation degree in q')
        parser.add_argument('--sets', type=int, help='also print invariant dimensions in this many sets')
        parser.add_argument('--compare', action='store_true',
                            help='compare with the exact table computed by the engine')


    def handle(self, *args, **options):
        n = options['n']
        if n < 1:
            raise ValueError(f'--n must be positive, got {n}')
        approximation = low_degree_approx(n, options['degree'])
        coinvariants = None
        if options['sets'] is not None:
            coinvariants = coinvariant_ring_series(n, options['sets'], options['degree'])
        context = approx_context(approximation, coinvariants)
        if options['compare']:
            g = GroupSpec(1, 1, n)
            store = self.store(options)
            run = (options['policy'], self.limits(options), self.workers(options), store)
            lower = frobenius_series(g, n - 1, *run) if n > 1 else None
            table = dict(universal_frobenius(n, frobenius_series(g, n, *run), lower).rows())
            self.report_store(store)
            context['agrees'] = agrees_to_degree(approximation, table, n)
            context['missing'] = list(missing_terms(approximation, table).items())
            context['document']['agrees_to_degree_n'] = context['agrees']
            context['document']['missing'] = [{'lam': list(lam), 's': term_list(f)} for lam, f in context['missing']]
        self.stdout.write(render('approx', context, options['format']))
