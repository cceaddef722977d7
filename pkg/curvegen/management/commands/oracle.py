# -*- coding: utf-8 -*-
"""
Oracle command

Exhaustive checks on the projective line, printed as a JSON pass/fail report
"""
import json

from django.core.management.base import BaseCommand, CommandError

from curvegen.conf import settings
from curvegen.oracle import euler_cross_check, semiorthogonality_report, serre_duality_check
from curvegen.report import ReportEncoder


class Command(BaseCommand):
    help = 'Cross-checks Riemann-Roch, Serre duality and semiorthogonality against exact computations'

    def add_arguments(self, parser):
        parser.add_argument('target', choices=['p1'], help='only the projective line is supported')
        parser.add_argument('--max-degree', type=int, default=None, help='scan twists in [-N, N]')

    def handle(self, *args, **options):
        max_deg = options['max_degree']
        if max_deg is None:
            max_deg = settings.CURVEGEN_ORACLE_MAX_DEGREE
        if max_deg < 1:
            raise CommandError('--max-degree must be at least 1', returncode=2)
        euler = euler_cross_check(max_deg)
        semiorthogonality = semiorthogonality_report(max_deg)
        serre = serre_duality_check(max_deg)
        passed = euler.passed and semiorthogonality['matches_offset_law'] and not serre
        report = {
            'target': options['target'],
            'max_degree': max_deg,
            'checks': [
                euler.to_dict(),
                semiorthogonality,
                {'check': 'serre_duality', 'failures': len(serre), 'failed': [list(p) for p in serre]},
            ],
            'passed': passed,
        }
        self.stdout.write(json.dumps(report, cls=ReportEncoder, sort_keys=True, indent=settings.CURVEGEN_JSON_INDENT))
        if not passed:
            raise CommandError('oracle checks failed', returncode=1)
