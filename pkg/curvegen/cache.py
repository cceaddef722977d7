# -*- coding: utf-8 -*-
"""
Cache module containing a definition of a PersistentLocMemCache
"""
from django.core.cache.backends.locmem import LocMemCache


class PersistentLocMemCache(LocMemCache):
    """
    A modified version on django's LocMemCache, that skips the code removing existing keys

    Parameters 'timeout', 'max_entries' and 'cull_frequency' passed to constructor won't have any effect,
    entries stay until cache is cleared
    """
    def __init__(self, name, params):
        params = dict(params, TIMEOUT=None)
        super(PersistentLocMemCache, self).__init__(name, params)

    def _cull(self):
        pass
