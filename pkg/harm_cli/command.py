"""Shared options and error handling for the management commands."""
import logging
import os

from django.conf import settings
from django.core.cache import caches
from django.core.management.base import BaseCommand, CommandError

from groups.groups import GroupSpecError, GroupTooLargeError
from groups.invariants import UnsupportedGroupError
from harm_cli.cache import ComponentStore, JsonLinesCache
from harm_cli.render import FORMATS
from harmonics.engine import ENGINE_VERSION, ConsistencyError, Limits, ResourceCapError
from universal.extract import UniversalityError

logger = logging.getLogger('harm_cli.command')

POLICIES = ('auto', 'polarized', 'reynolds')
ELIMINATIONS = ('exact', 'modular')

USAGE = 2
RESOURCE_CAP = 3
VERIFICATION = 4


class HarmCommand(BaseCommand):
    """Maps domain errors to exit codes: 2 for usage, 3 for a resource
    cap, 4 for a failed verification.

    """
    formats = FORMATS

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=self.formats, default='text')
        parser.add_argument('--elimination', choices=ELIMINATIONS, default=settings.HARM_ELIMINATION,
                            help='exact elimination, or modular pivoting verified exactly')
        parser.add_argument('--max-group-order', type=int, default=settings.HARM_MAX_GROUP_ORDER)
        parser.add_argument('--max-matrix-entries', type=int, default=settings.HARM_MAX_MATRIX_ENTRIES)


    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except (ResourceCapError, GroupTooLargeError) as error:
            logger.warning('resource cap: %s', error)
            raise CommandError(str(error), returncode=RESOURCE_CAP) from error
        except (UniversalityError, ConsistencyError) as error:
            raise CommandError(str(error), returncode=VERIFICATION) from error
        except (GroupSpecError, UnsupportedGroupError, ValueError) as error:
            raise CommandError(str(error), returncode=USAGE) from error


    def limits(self, options) -> Limits:
        return Limits(options['max_group_order'], options['max_matrix_entries'], options['elimination'])


class EngineCommand(HarmCommand):
    "A command that computes harmonic components."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--policy', choices=POLICIES, default=settings.HARM_POLICY)
        parser.add_argument('--jobs', type=int, default=settings.HARM_JOBS,
                            help='worker processes; 0 uses every core')
        parser.add_argument('--cache', metavar='PATH',
                            help='JSONL component cache to use instead of the configured one')


    def add_group_arguments(self, parser, sets=True):
        parser.add_argument('--group', required=True, help='S3, C4, B2, I2(5), D4 or G(m,p,n)')
        if sets:
            parser.add_argument('--sets', type=int, default=1, help='number of sets of variables')
            parser.add_argument('--max-tdeg', type=int, help='stop at this total degree')


    def workers(self, options) -> int:
        jobs = options['jobs']
        if jobs < 0:
            raise ValueError(f'--jobs must not be negative, got {jobs}')
        return jobs or os.cpu_count() or 1


    def store(self, options) -> ComponentStore:
        if options['cache']:
            cache = JsonLinesCache(options['cache'], {'VERSION': ENGINE_VERSION})
        else:
            cache = caches['components']
        return ComponentStore(cache)


    def report_store(self, store: ComponentStore):
        logger.info('component cache: %d hits, %d misses', store.hits, store.misses)
