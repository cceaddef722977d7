# -*- coding: utf-8 -*-
"""
Cli module containing the ``curvegen`` console script

Runs management commands without a host project: if no settings module is given, a minimal configuration
with only this app installed is used
"""
import os
import sys

from django.conf import settings
from django.core.management import execute_from_command_line

DEFAULT_SETTINGS = {
    'INSTALLED_APPS': ['curvegen'],
    'LOGGING': {
        'version': 1,
        'disable_existing_loggers': False,
        'handlers': {'console': {'class': 'logging.StreamHandler'}},
        'loggers': {'curvegen': {'handlers': ['console'], 'level': 'WARNING'}},
    },
}


def main(argv=None):
    """
    Entry point, e.g. ``curvegen analyze request.txt --json``
    """
    if not settings.configured and 'DJANGO_SETTINGS_MODULE' not in os.environ:
        settings.configure(**DEFAULT_SETTINGS)
    execute_from_command_line(argv or sys.argv)


if __name__ == '__main__':
    main()
