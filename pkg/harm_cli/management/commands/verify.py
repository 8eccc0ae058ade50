from django.conf import settings
from django.core.management.base import CommandError

from harm_cli.command import VERIFICATION, EngineCommand
from universal.checks import SUITES, Context, run_suite


class Command(EngineCommand):
    help = 'Run the verification suite against the published tables and report every check.'
    formats = ('text', 'json')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--suite', choices=SUITES, default='quick')
        parser.add_argument('--report', metavar='PATH', help='also write the JSON report here')
        parser.add_argument('--stretch', action='store_true',
                            help='include the S5 and three-set S4 checks in the quick suite')


    def handle(self, *args, **options):
        store = self.store(options)
        context = Context(self.limits(options), self.workers(options), store)
        report = run_suite(options['suite'], context, options['stretch'], settings.VERSION_ID)
        self.report_store(store)
        if options['report']:
            with open(options['report'], 'w', encoding='utf-8') as stream:
                stream.write(report.as_json() + '\n')
        self.stdout.write(report.as_json() if options['format'] == 'json' else report.render_text())
        if not report.ok:
            failed = ', '.join(result.id for result in report.failures)
            raise CommandError(f'required checks failed: {failed}', returncode=VERIFICATION)
