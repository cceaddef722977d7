# -*- coding: utf-8 -*-
"""
Curvegen is an app deciding which objects of the derived category of a curve are (classical) generators,
with cited rules and bounds on generating time
"""
default_app_config = 'curvegen.apps.CurvegenConfig'
