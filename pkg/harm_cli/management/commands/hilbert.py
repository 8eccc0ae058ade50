from groups.groups import parse_group
from harm_cli.command import EngineCommand
from harm_cli.render import hilbert_context, render
from harmonics.engine import hilbert_series


class Command(EngineCommand):
    help = 'Multigraded Hilbert series of the diagonal harmonics of a group.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_group_arguments(parser)


    def handle(self, *args, **options):
        g = parse_group(options['group'])
        store = self.store(options)
        series = hilbert_series(g, options['sets'], options['policy'], self.limits(options),
                                self.workers(options), store, options['max_tdeg'])
        self.report_store(store)
        self.stdout.write(render('hilbert', hilbert_context(series), options['format']))
