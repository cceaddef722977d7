# -*- coding: utf-8 -*-
"""
Settings of the demo project, used to run management commands and tests of curvegen
"""
import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = 'demo-only-not-secret'

DEBUG = True

INSTALLED_APPS = [
    'curvegen',
]

DATABASES = {}

CURVEGEN_JSON_INDENT = 2

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {'format': '{levelname} {name}: {message}', 'style': '{'},
    },
    'handlers': {
        'console': {'class': 'logging.StreamHandler', 'formatter': 'simple'},
    },
    'loggers': {
        'curvegen': {'handlers': ['console'], 'level': os.environ.get('CURVEGEN_LOG_LEVEL', 'WARNING')},
    },
}
