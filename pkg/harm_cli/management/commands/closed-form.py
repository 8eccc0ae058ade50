from django.core.management.base import CommandError

from groups.groups import parse_group
from harm_cli.command import VERIFICATION, EngineCommand
from harm_cli.render import closed_form_context, render
from harmonics.engine import hilbert_series
from universal.closed_forms import closed_form, s_form
from universal.extract import extract_universal


class Command(EngineCommand):
    help = 'Closed-form h-expansion for cyclic, dihedral and G(m,1,2) groups.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_group_arguments(parser, sets=False)
        parser.add_argument('--check', action='store_true',
                            help='also compute the expansion with the engine and compare')


    def handle(self, *args, **options):
        g = parse_group(options['group'])
        hform = closed_form(g)
        context = closed_form_context(g, hform, s_form(g))
        if options['check']:
            store = self.store(options)
            run = (options['policy'], self.limits(options), self.workers(options), store)
            lower = hilbert_series(g, g.n - 1, *run) if g.n > 1 else None
            u = extract_universal(g, hilbert_series(g, g.n, *run), lower)
            self.report_store(store)
            context['checked'] = u.as_symfunc() == hform
            context['document']['checked'] = context['checked']
        self.stdout.write(render('closed_form', context, options['format']))
        if context.get('checked') is False:
            raise CommandError(f'the engine disagrees with the closed form of {g}', returncode=VERIFICATION)
