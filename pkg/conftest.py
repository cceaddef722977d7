# -*- coding: utf-8 -*-
"""
Pytest wiring: configure Django with the demo project settings, as manage.py does
"""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'demo.settings')
django.setup()
