from groups.groups import parse_group
from harm_cli.command import EngineCommand
from harm_cli.render import frobenius_context, render
from harmonics.engine import frobenius_series
from universal.frobenius import mh_form, positivity_report, universal_frobenius


class Command(EngineCommand):
    help = ('Graded S_n multiplicities of the diagonal harmonics of S_n; with as many sets of '
            'variables as n, also the universal table.')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_group_arguments(parser)


    def handle(self, *args, **options):
        g = parse_group(options['group'])
        store = self.store(options)
        run = (options['policy'], self.limits(options), self.workers(options), store)
        series = frobenius_series(g, options['sets'], *run, max_tdeg=options['max_tdeg'])
        table = mh = positivity = None
        if series.r == g.n and series.max_tdeg is None:
            lower = frobenius_series(g, g.n - 1, *run) if g.n > 1 else None
            table = universal_frobenius(g.n, series, lower)
            mh = mh_form(table)
            positivity = positivity_report(table)
        self.report_store(store)
        self.stdout.write(render('frobenius', frobenius_context(series, table, mh, positivity),
                                 options['format']))
