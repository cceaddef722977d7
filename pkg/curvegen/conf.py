# -*- coding: utf-8 -*-
"""
Conf module containing app settings
"""
from django.conf import settings as django_settings


class CurvegenSettings(object):
    """
    Container for settings exclusive for an app, with possibility to replace any in project settings
    """
    def __getattribute__(self, item):
        if item.startswith('CURVEGEN_'):
            try:
                return getattr(django_settings, item)
            except AttributeError:
                pass
        return super(CurvegenSettings, self).__getattribute__(item)

    CURVEGEN_RULES = [
        'curvegen.rules.SemistableRule',
        'curvegen.rules.GenusZeroRule',
        'curvegen.rules.GenusOneRule',
        'curvegen.rules.TorsionPlusBundleRule',
        'curvegen.rules.SufficientlyUnstableRule',
        'curvegen.rules.HarderNarasimhanGapRule',
        'curvegen.rules.SimpleOrthogonalRule',
        'curvegen.rules.UndecidedRule',
    ]
    """
    Rules used by classical_status, tried in order until one fires

    Every entry is a dotted path to a subclass of ``curvegen.rules.Rule``. Order matters: cheap complete rules
    come first and the last rule should always fire (UndecidedRule), otherwise an object that matches no rule
    raises an error. Dropping entries is fine for experiments, e.g. removing GenusOneRule leaves genus-one verdicts
    on split objects unchanged
    """

    CURVEGEN_VERDICT_REGISTRY = {
        'BACKEND': 'curvegen.cache.PersistentLocMemCache',
        'LOCATION': '__curvegen_verdict_registry',
    }
    """
    Cache to be used in verdict registry (which memoises verdicts of analyzed objects)

    Variable fields are equivalent to django's ``CACHES`` entries. Defaults to PersistentLocMemCache
    (LocMemCache, but with no-op for culling), so verdicts live as long as the process does.
    Any django cache works, e.g. FileBasedCache to keep a ledger across runs
    """

    CURVEGEN_REGISTRY_ENABLED = True
    """
    Whether verdicts computed by reports should be memoised in the verdict registry

    Verdicts are pure functions of their input, so turning it off changes only speed
    """

    CURVEGEN_ORACLE_MAX_DEGREE = 20
    """
    Default range ``[-N, N]`` of twist degrees scanned by ``oracle p1``
    """

    CURVEGEN_FUZZ_SEED = 20251
    """
    Seed of the pseudo-random corpora used by ``selftest``, fixed so that runs are reproducible
    """

    CURVEGEN_FUZZ_SAMPLES = 10000
    """
    Size of the randomized corpus for the generator criterion and soundness suites
    """

    CURVEGEN_GENUS_ONE_SAMPLES = 1000
    """
    Number of randomized split objects checked by the genus-one suite
    """

    CURVEGEN_SERRE_SAMPLES = 1000
    """
    Number of random positive-rank pairs checked by the Serre antisymmetry suite
    """

    CURVEGEN_EQUIVARIANCE_OBJECTS = 100
    CURVEGEN_EQUIVARIANCE_MOVES = 100
    """
    Equivariance suite checks this many objects, each against this many random (shift, twist) pairs
    """

    CURVEGEN_JSON_INDENT = 2
    """
    Indentation of machine-readable reports, None gives a single line
    """


settings = CurvegenSettings()
