# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# Autodoc imports the modules, so Django is set up with the demo project settings first.
import os
import sys

import django

sys.path.insert(0, os.path.abspath('..'))
os.environ['DJANGO_SETTINGS_MODULE'] = 'demo.settings'
django.setup()

project = u'Django Curvegen'
copyright = u'2026, Curvegen developers'
author = u'Curvegen developers'
release = u'1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = [u'_build']

html_theme = 'classic'
