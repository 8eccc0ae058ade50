from groups.groups import parse_group
from harm_cli.command import EngineCommand
from harm_cli.render import render, universal_context
from harmonics.engine import hilbert_series
from universal.extract import dimension_polynomial, extract_universal, h_expansion


class Command(EngineCommand):
    help = 'Universal Schur and h-expansions of the Hilbert series of a group.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_group_arguments(parser, sets=False)


    def handle(self, *args, **options):
        g = parse_group(options['group'])
        store = self.store(options)
        run = (options['policy'], self.limits(options), self.workers(options), store)
        series = hilbert_series(g, g.n, *run)
        lower = hilbert_series(g, g.n - 1, *run) if g.n > 1 else None
        u = extract_universal(g, series, lower)
        self.report_store(store)
        context = universal_context(series, u, h_expansion(u), dimension_polynomial(u))
        self.stdout.write(render('universal', context, options['format']))
