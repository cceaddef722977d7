# -*- coding: utf-8 -*-
"""
Analyze command

Parses a request file and prints the report of its queries
"""
import io
import sys

from django.core.management.base import BaseCommand, CommandError

from curvegen.dsl import parse
from curvegen.exceptions import DSLError, QueryError
from curvegen.registry import verdict_registry
from curvegen.report import run

PARSE_ERROR = 2
ANALYSIS_ERROR = 1


class Command(BaseCommand):
    help = 'Analyzes objects of the derived category of a curve described in a request file'
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument('file', help='request file, - for standard input')
        parser.add_argument('--json', action='store_true', help='print the machine-readable report')
        parser.add_argument('--ledger', metavar='PATH', help='dump the verdict registry to a csv file')
        parser.add_argument(
            '--load-ledger', metavar='PATH', help='load verdicts from a csv file written by --ledger before analyzing'
        )

    def read(self, path, stdin):
        if path == '-':
            return stdin.read(), '<stdin>'
        try:
            with io.open(path, encoding='utf-8') as source_file:
                return source_file.read(), path
        except (IOError, OSError) as e:
            raise CommandError('cannot read {}: {}'.format(path, e), returncode=PARSE_ERROR)
        except UnicodeDecodeError:
            raise CommandError('{}: not valid UTF-8'.format(path), returncode=PARSE_ERROR)

    def load_ledger(self, path):
        try:
            verdict_registry.from_csv(path, clear=False)
        except (IOError, OSError, ValueError) as e:
            raise CommandError('cannot load ledger {}: {}'.format(path, e), returncode=PARSE_ERROR)

    def handle(self, *args, **options):
        source, filename = self.read(options['file'], options.get('stdin') or sys.stdin)
        try:
            request = parse(source, filename)
        except DSLError as e:
            raise CommandError(str(e), returncode=PARSE_ERROR)
        if options.get('load_ledger'):
            self.load_ledger(options['load_ledger'])
        try:
            report = run(request)
        except QueryError as e:
            raise CommandError(str(e), returncode=ANALYSIS_ERROR)
        if options['ledger']:
            verdict_registry.to_csv(options['ledger'])
        if options['json']:
            self.stdout.write(report.to_json())
        else:
            self.stdout.write(report.to_text(), ending='')
