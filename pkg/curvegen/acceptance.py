# -*- coding: utf-8 -*-
"""
Acceptance module

Property suites run by ``manage.py selftest``. Randomized corpora are drawn from ``random.Random`` seeded with
``CURVEGEN_FUZZ_SEED``, so every run checks the same objects
"""
import logging
import random
from collections import namedtuple

from curvegen.conf import settings
from curvegen.dsl import parse
from curvegen.engine import classical_status, is_generator, semiorthogonality_check
from curvegen.gentime import compose_bound, gentime_upper_bound
from curvegen.numerics import ChernPair, Curve, euler_pairing, serre_twist
from curvegen.objects import FormalObject, Kind, SemistablePiece, Splitting, shift, twist
from curvegen.oracle import P1, P1Object, euler_cross_check, semiorthogonality_report
from curvegen.rules import Context, Decision, SimpleOrthogonalRule, SufficientlyUnstableRule

logger = logging.getLogger(__name__)

MAX_GENUS = 10
MAX_PIECES = 6
MAX_DEGREE = 50
MAX_RANK = 8
MAX_SHIFT = 3


class SuiteResult(namedtuple('SuiteResult', 'number name checked failures examples')):
    """
    ``examples`` holds up to a few failing inputs, rendered as strings
    """
    __slots__ = ()

    @property
    def passed(self):
        return self.failures == 0

    def to_dict(self):
        return {
            'number': self.number,
            'name': self.name,
            'checked': self.checked,
            'failures': self.failures,
            'examples': list(self.examples),
            'passed': self.passed,
        }


class _Tally(object):
    def __init__(self):
        self.checked = 0
        self.failed = []

    def check(self, condition, example):
        self.checked += 1
        if not condition:
            self.failed.append(example)

    def result(self, number, name):
        return SuiteResult(number, name, self.checked, len(self.failed), [str(e) for e in self.failed[:5]])


def random_class(rng, torsion=False):
    if torsion:
        return ChernPair(0, rng.randint(1, 10))
    return ChernPair(rng.randint(1, MAX_RANK), rng.randint(-MAX_DEGREE, MAX_DEGREE))


def random_object(rng, split_only=False, allow_torsion=True):
    """
    Random annotation-free object: up to MAX_PIECES pieces spread over a few cohomological degrees

    About a quarter of the objects are made semistable on purpose, random slopes almost never agree

    :param rng: random.Random
    :param split_only: whether every sheaf must be split
    :param allow_torsion: whether torsion pieces may appear
    :return: FormalObject
    """
    count = rng.randint(1, MAX_PIECES)
    degrees = [rng.randint(-MAX_SHIFT, MAX_SHIFT) for _ in range(count)]
    if rng.random() < 0.25:
        if allow_torsion and rng.random() < 0.3:
            classes = [random_class(rng, torsion=True) for _ in range(count)]
        else:
            base = random_class(rng)
            classes = [ChernPair(base.rank * k, base.degree * k) for k in (rng.randint(1, 3) for _ in range(count))]
    else:
        classes = [random_class(rng, torsion=allow_torsion and rng.random() < 0.2) for _ in range(count)]
    summands = [(d, SemistablePiece(c)) for d, c in zip(degrees, classes)]
    splitting = {} if split_only else {d: Splitting.HN_ONLY for d in set(degrees) if rng.random() < 0.2}
    return FormalObject(summands, splitting)


def fuzz_corpus(seed=None, size=None):
    """
    :return: list of (object, curve) pairs, genera from 0 to MAX_GENUS
    """
    rng = random.Random(settings.CURVEGEN_FUZZ_SEED if seed is None else seed)
    size = settings.CURVEGEN_FUZZ_SAMPLES if size is None else size
    return [(random_object(rng), Curve(rng.randint(0, MAX_GENUS))) for _ in range(size)]


def _semistable_by_cross_multiplication(obj):
    pieces = obj.pieces
    if all(p.is_torsion for p in pieces):
        return True
    if any(p.is_torsion for p in pieces):
        return False
    first = pieces[0]
    return all(p.degree * first.rank == first.degree * p.rank for p in pieces)


def de_jong_suite():
    tally = _Tally()
    for genus in range(2, MAX_GENUS + 1):
        request = parse(
            'curve genus {}\n'
            'object E = bundle(r=1, d=0) + bundle(r=1, d=1, id=L)\n'
            'assume hom(E.1, L) = 0\n'
            'analyze E\n'.format(genus)
        )
        obj = request.objects['E']
        verdict = classical_status(obj, request.curve, request.assumptions)
        tally.check(
            is_generator(obj, request.curve) and verdict.decision == Decision.NO
            and verdict.rule == SimpleOrthogonalRule.id,
            'genus {}: {!r}'.format(genus, verdict)
        )
    return tally.result(1, 'de Jong object is a generator but not a classical generator')


def generator_criterion_suite(corpus):
    tally = _Tally()
    for obj, curve in corpus:
        tally.check(
            is_generator(obj, curve) == (not _semistable_by_cross_multiplication(obj)),
            '{!r} at genus {}'.format(obj, curve.genus)
        )
    return tally.result(2, 'generator if and only if not semistable')


def genus_one_suite():
    tally = _Tally()
    rng = random.Random(settings.CURVEGEN_FUZZ_SEED + 1)
    curve = Curve(1)
    gap_rule = SufficientlyUnstableRule()
    for _ in range(settings.CURVEGEN_GENUS_ONE_SAMPLES):
        obj = random_object(rng, split_only=True)
        verdict = classical_status(obj, curve)
        example = repr(obj)
        tally.check(verdict.decision != Decision.UNKNOWN, example)
        tally.check((verdict.decision == Decision.YES) == is_generator(obj, curve), example)
        classification = obj.classification
        if classification.kind == Kind.LOCALLY_FREE and not classification.semistable:
            tally.check(gap_rule.check(Context(obj, curve)) is not None, example)
    return tally.result(3, 'genus one trichotomy')


def riemann_roch_oracle_suite():
    report = euler_cross_check(settings.CURVEGEN_ORACLE_MAX_DEGREE)
    return SuiteResult(
        4, 'Riemann-Roch agrees with the projective line', report.pairs, report.failures,
        [str(p) for p in report.failed[:5]]
    )


def semiorthogonality_suite():
    tally = _Tally()
    max_deg = settings.CURVEGEN_ORACLE_MAX_DEGREE
    tally.check(semiorthogonality_report(max_deg)['matches_offset_law'], 'vanishing pairs differ from b = a - 1')
    for a in range(-max_deg, max_deg + 1):
        for b in range(-max_deg, max_deg + 1):
            first = FormalObject([(0, SemistablePiece((1, a)))])
            second = FormalObject([(0, SemistablePiece((1, b)))])
            exact = not any(P1Object.from_formal(first).ext_dims(P1Object.from_formal(second)).values())
            possible = semiorthogonality_check(first, second, P1).possible
            tally.check(possible == exact == (b == a - 1), (a, b))
    return tally.result(5, 'semiorthogonality exactly at slope offset g - 1')


def _bound(source):
    request = parse(source)
    obj = request.objects['E']
    return gentime_upper_bound(obj, request.curve, classical_status(obj, request.curve)).value


def gentime_table_suite():
    tally = _Tally()
    fixtures = [
        ('curve genus 2\nobject E = bundle(r=1, d=0) + tors(len=1)\n', 97),
        ('curve genus 2\nobject E = tors(len=2) + bundle(r=2, d=1)\n', 195),
        ('curve genus 2\nobject E = bundle(r=1, d=0) + bundle(r=1, d=5)\n', 391),
    ]
    for source, expected in fixtures:
        value = _bound(source)
        tally.check(value == expected, '{!r}: {} != {}'.format(source, value, expected))
    for genus in range(0, 4 * MAX_GENUS + 1):
        tally.check(48 * genus + 1 < 96 * genus + 3 < 192 * genus + 7, 'genus {}'.format(genus))
    for genus in range(1, MAX_GENUS + 1):
        tally.check(compose_bound(1, 24 * genus + 1) == 48 * genus + 1, 'genus {}'.format(genus))
    return tally.result(6, 'generating time table')


def serre_antisymmetry_suite():
    tally = _Tally()
    rng = random.Random(settings.CURVEGEN_FUZZ_SEED + 2)
    for _ in range(settings.CURVEGEN_SERRE_SAMPLES):
        e, f = random_class(rng), random_class(rng)
        curve = Curve(rng.randint(0, MAX_GENUS))
        tally.check(
            euler_pairing(e, f, curve) == -euler_pairing(f, serre_twist(e, curve), curve),
            '{!r}, {!r} at genus {}'.format(e, f, curve.genus)
        )
    return tally.result(7, 'Serre antisymmetry of the Euler pairing')


def soundness_suite(corpus):
    tally = _Tally()
    for obj, curve in corpus:
        verdict = classical_status(obj, curve)
        tally.check(verdict.decision != Decision.YES or is_generator(obj, curve), '{!r}: {!r}'.format(obj, verdict))
    return tally.result(8, 'classical generators are generators')


def equivariance_suite():
    tally = _Tally()
    rng = random.Random(settings.CURVEGEN_FUZZ_SEED + 3)
    for _ in range(settings.CURVEGEN_EQUIVARIANCE_OBJECTS):
        obj, curve = random_object(rng), Curve(rng.randint(0, MAX_GENUS))
        verdict, generator = classical_status(obj, curve), is_generator(obj, curve)
        for _ in range(settings.CURVEGEN_EQUIVARIANCE_MOVES):
            n, t = rng.randint(-5, 5), rng.randint(-MAX_DEGREE, MAX_DEGREE)
            moved = twist(shift(obj, n), t)
            tally.check(
                classical_status(moved, curve).same_as(verdict) and is_generator(moved, curve) == generator,
                '{!r} shifted by {} and twisted by {} at genus {}'.format(obj, n, t, curve.genus)
            )
    return tally.result(9, 'verdicts are invariant under shifts and twists')


def run_suites(numbers=None):
    """
    Runs acceptance suites

    :param numbers: optional collection of suite numbers, all suites by default
    :return: list of SuiteResult, in suite order
    """
    corpus = []
    if numbers is None or {2, 8} & set(numbers):
        corpus = fuzz_corpus()
    suites = [
        (1, de_jong_suite),
        (2, lambda: generator_criterion_suite(corpus)),
        (3, genus_one_suite),
        (4, riemann_roch_oracle_suite),
        (5, semiorthogonality_suite),
        (6, gentime_table_suite),
        (7, serre_antisymmetry_suite),
        (8, lambda: soundness_suite(corpus)),
        (9, equivariance_suite),
    ]
    results = []
    for number, suite in suites:
        if numbers is not None and number not in numbers:
            continue
        result = suite()
        logger.info('suite %d (%s): %d checks, %d failures', number, result.name, result.checked, result.failures)
        results.append(result)
    return results
