# -*- coding: utf-8 -*-
from hypothesis import settings

settings.register_profile('curvegen', deadline=None, max_examples=100)
settings.load_profile('curvegen')
