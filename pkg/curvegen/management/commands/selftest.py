# -*- coding: utf-8 -*-
"""
Selftest command

Runs the acceptance property suites
"""
import json

from django.core.management.base import BaseCommand, CommandError

from curvegen.acceptance import run_suites
from curvegen.conf import settings


class Command(BaseCommand):
    help = 'Runs the acceptance property suites over fixed-seed randomized corpora'

    def add_arguments(self, parser):
        parser.add_argument(
            '--suite', type=int, action='append', dest='suites', metavar='N', help='run only suite N (repeatable)'
        )
        parser.add_argument('--json', action='store_true', help='print results as JSON')

    def handle(self, *args, **options):
        results = run_suites(options['suites'])
        if options['json']:
            self.stdout.write(json.dumps(
                [r.to_dict() for r in results], sort_keys=True, indent=settings.CURVEGEN_JSON_INDENT
            ))
        else:
            for result in results:
                self.stdout.write('{} {}. {}: {} checks, {} failures'.format(
                    'ok  ' if result.passed else 'FAIL', result.number, result.name, result.checked, result.failures
                ))
                for example in result.examples:
                    self.stdout.write('       {}'.format(example))
        failed = [r.number for r in results if not r.passed]
        if failed:
            raise CommandError('suites failed: {}'.format(', '.join(str(n) for n in failed)), returncode=1)
