# -*- coding: utf-8 -*-
"""
Apps module
"""
from django.apps import AppConfig


class CurvegenConfig(AppConfig):
    name = 'curvegen'
    verbose_name = 'Generators of derived categories of curves'
