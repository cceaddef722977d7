# -*- coding: utf-8 -*-
"""
Registry module

Contains a definition of a VerdictRegistry - object memoising classical generator verdicts of analyzed objects
"""
import copy
import csv
import hashlib
import json
import logging

from django.utils.module_loading import import_string

from curvegen.conf import settings

logger = logging.getLogger(__name__)


class Registry(object):
    def __init__(self, cache_settings, initial_value, key_list_id):
        """
        Gets registry wrapping cache object with key management and csv conversion enabled

        :param cache_settings: parameters passed to cache
        :param initial_value: empty value in cache
        :param key_list_id: unique id for key list
        """
        self.cache = self._get_cache(cache_settings)
        self.initial_value = initial_value
        self.key_list_id = key_list_id

    @staticmethod
    def _get_cache(cache_params):
        """
        Instantiates cache object based on settings

        :param cache_params: parameters passed to cache including required 'BACKEND' and 'LOCATION' settings
        :return: cache object for registry
        """
        params = copy.deepcopy(cache_params)
        backend = params.pop('BACKEND')
        location = params.pop('LOCATION', '')
        backend_cls = import_string(backend)
        return backend_cls(location, params)

    def add_key(self, key):
        """
        Adds a key name to separate cache field, most caches can't list their keys

        :param key: key to be added
        """
        key_list = self.get_keys()
        if key not in key_list:
            key_list.append(key)
            self.cache.set(self.key_list_id, key_list)

    def get_keys(self):
        return self.cache.get(self.key_list_id) or []

    def get(self, key):
        """
        Gets value from cache, or an initial value if there was none

        :param key: any object, which str method defines cache key
        :return: value received from registry cache or init value
        """
        value = self.cache.get(str(key))
        return copy.deepcopy(self.initial_value) if value is None else value

    def set(self, key, value):
        key = str(key)
        self.add_key(key)
        self.cache.set(key, value)
        return value

    def clear(self):
        self.cache.clear()

    @staticmethod
    def row_to_pair(row):
        """
        Converts csv row to cache (k, v) pair

        :param row: list of contents in a csv file row
        :return: key and value pair for cache
        """
        raise NotImplementedError

    @staticmethod
    def pair_to_row(key, value):
        """
        Converts cache (k, v) pair to csv row

        :param key: cache key
        :param value: value from cache
        :return: list of contents in a row to be added to csv file
        """
        raise NotImplementedError

    def from_csv(self, filepath, clear=True):
        """
        Reads file contents from file and initializes registry's cache

        :param filepath: file to read from
        :param clear: whether cache should be cleared before operation
        """
        if clear:
            self.clear()
        with open(filepath, newline='') as csv_file:
            for row in csv.reader(csv_file, delimiter=','):
                key, value = self.row_to_pair(row)
                self.set(key, value)

    def to_csv(self, filepath):
        """
        Dumps cache contents to csv file, rows sorted by key

        :param filepath: file to write to
        """
        with open(filepath, mode='w', newline='') as csv_file:
            writer = csv.writer(csv_file, delimiter=',', quotechar='"', quoting=csv.QUOTE_MINIMAL)
            for key in sorted(self.get_keys()):
                writer.writerow(self.pair_to_row(key, self.get(key)))


class LedgerEntry(object):
    """
    Verdict together with the input it was computed for
    """
    def __init__(self, genus, source, assumptions, verdict):
        self.genus = genus
        self.source = source
        self.assumptions = tuple(assumptions)
        self.verdict = verdict

    def __repr__(self):
        return 'LedgerEntry(genus={}, {!r}, {!r})'.format(self.genus, self.source, self.verdict)


def _assumptions_text(assumptions):
    return ';'.join('{}>{}'.format(a.source, a.target) for a in assumptions)


def _assumptions_from_text(text):
    from curvegen.engine import Assumption

    return tuple(Assumption(*part.split('>')) for part in text.split(';') if part)


class VerdictRegistry(Registry):
    """
    Registry with a cache for verdicts of ``classical_status``

    Keys are digests of the genus, the canonical DSL text of the object, the assumptions and the configured rules,
    so a changed ``CURVEGEN_RULES`` never returns stale verdicts
    """
    def __init__(self, cache_settings=None):
        super(VerdictRegistry, self).__init__(
            cache_settings=cache_settings or settings.CURVEGEN_VERDICT_REGISTRY,
            initial_value=None,
            key_list_id='__curvegen_verdict_registry_keys',
        )

    @staticmethod
    def key_for(genus, source, assumptions):
        digest = hashlib.sha1('\n'.join(
            [str(genus), source, _assumptions_text(sorted(assumptions))] + list(settings.CURVEGEN_RULES)
        ).encode('utf-8')).hexdigest()
        return 'g{}:{}'.format(genus, digest)

    def status(self, obj, curve, assumptions=()):
        """
        Verdict of an object, computed once per distinct input

        :param obj: FormalObject
        :param curve: Curve
        :param assumptions: iterable of Assumption
        :return: Verdict
        """
        from curvegen.dsl import object_source
        from curvegen.engine import classical_status

        assumptions = tuple(assumptions)
        if not settings.CURVEGEN_REGISTRY_ENABLED:
            return classical_status(obj, curve, assumptions)
        source = object_source(obj)
        key = self.key_for(curve.genus, source, assumptions)
        entry = self.get(key)
        if entry is not None:
            logger.debug('verdict registry hit for %s', key)
            return entry.verdict
        verdict = classical_status(obj, curve, assumptions)
        self.set(key, LedgerEntry(curve.genus, source, assumptions, verdict))
        return verdict

    @staticmethod
    def row_to_pair(row):
        from curvegen.engine import get_rules
        from curvegen.rules import Verdict

        key, genus, source, assumptions, decision, rule, number, reason, used, details = row
        citations = {r.id: r.citation for r in get_rules()}
        verdict = Verdict(
            decision, rule or None, citations.get(rule, ''), number=int(number) if number else None,
            assumptions_used=_assumptions_from_text(used), reason=reason, details=json.loads(details or '{}'),
        )
        return key, LedgerEntry(int(genus), source, _assumptions_from_text(assumptions), verdict)

    @staticmethod
    def pair_to_row(key, value):
        from curvegen.report import ReportEncoder

        verdict = value.verdict
        return [
            key, value.genus, value.source, _assumptions_text(value.assumptions), verdict.decision,
            verdict.rule or '', '' if verdict.number is None else verdict.number, verdict.reason,
            _assumptions_text(verdict.assumptions_used),
            json.dumps(verdict.details, cls=ReportEncoder, sort_keys=True),
        ]


verdict_registry = VerdictRegistry()
