# -*- coding: utf-8 -*-
"""
Engine module

Generator detection, the classical generator verdict, semiorthogonality feasibility
and the numerical class of objects orthogonal to a semistable object
"""
import logging
from collections import namedtuple

from django.utils.module_loading import import_string

from curvegen.conf import settings
from curvegen.exceptions import NotSemistable, UnknownAssumptionTarget
from curvegen.numerics import INFINITY, minimal_class
from curvegen.objects import Kind, euler_pairing_objects
from curvegen.rules import Context, Decision, Verdict

logger = logging.getLogger(__name__)


class Assumption(namedtuple('Assumption', 'source target kind')):
    """
    User supplied fact ``Hom(source, target) = 0``, both ends name pieces by id or positional tag (``E.1``)
    """
    __slots__ = ()
    HOM_VANISHES = 'hom_vanishes'

    def __new__(cls, source, target, kind=HOM_VANISHES):
        return super(Assumption, cls).__new__(cls, source, target, kind)

    def matches(self, source_piece, target_piece):
        return self.source in source_piece.refs and self.target in target_piece.refs

    def to_dict(self):
        return {'source': self.source, 'target': self.target, 'kind': self.kind}

    def __str__(self):
        return 'hom({}, {}) = 0'.format(self.source, self.target)


class HomVanishing(namedtuple('HomVanishing', 'vanishes reason assumption')):
    """
    Answer of hom_vanishes: ``vanishes`` False means non-zero or unknown
    """
    __slots__ = ()
    SLOPE = 'slope'
    STABLE = 'stable'
    ASSUMPTION = 'assumption'


NONZERO_OR_UNKNOWN = HomVanishing(False, None, None)


def hom_vanishes(source, target, assumptions=()):
    """
    Decides Hom(source, target) = 0 from slopes, stability and user assumptions

    - a semistable sheaf has no morphisms to a semistable sheaf of smaller slope
    - two stable sheaves of one slope have no morphisms unless they are isomorphic
      (pieces are presumed non-isomorphic unless they share an id)
    - otherwise only an assumption can tell

    :param source: SemistablePiece
    :param target: SemistablePiece
    :param assumptions: iterable of Assumption
    :return: HomVanishing
    """
    if target.slope < source.slope:
        return HomVanishing(True, HomVanishing.SLOPE, None)
    if target.slope == source.slope and source.is_simple and target.is_simple \
            and not source.is_torsion and not source.same_object(target):
        return HomVanishing(True, HomVanishing.STABLE, None)
    for assumption in assumptions:
        if assumption.kind == Assumption.HOM_VANISHES and assumption.matches(source, target):
            return HomVanishing(True, HomVanishing.ASSUMPTION, assumption)
    return NONZERO_OR_UNKNOWN


def is_generator(obj, curve):
    """
    An object generates the derived category of a curve if and only if it is not semistable

    :param obj: FormalObject
    :param curve: Curve
    :return: bool
    """
    return not obj.classification.semistable


_rules_cache = {}


def get_rules():
    """
    Instantiates rules listed in ``CURVEGEN_RULES``, instances are reused as long as the setting doesn't change

    :return: list of Rule objects
    """
    paths = tuple(settings.CURVEGEN_RULES)
    if paths not in _rules_cache:
        _rules_cache[paths] = [import_string(path)() for path in paths]
    return _rules_cache[paths]


def check_assumptions(obj, assumptions):
    """
    Makes sure every assumption points at pieces of the analyzed object

    :raise UnknownAssumptionTarget: when a reference matches no piece
    """
    refs = set()
    for piece in obj.pieces:
        refs |= piece.refs
    for assumption in assumptions:
        for ref in (assumption.source, assumption.target):
            if ref not in refs:
                raise UnknownAssumptionTarget('{}: no piece named {!r}'.format(assumption, ref))


def classical_status(obj, curve, assumptions=()):
    """
    Classical generator verdict: the verdict of the first rule in ``CURVEGEN_RULES`` that fires

    :param obj: FormalObject
    :param curve: Curve
    :param assumptions: iterable of Assumption referring to pieces of obj
    :return: Verdict
    """
    assumptions = tuple(assumptions)
    check_assumptions(obj, assumptions)
    context = Context(obj, curve, assumptions)
    for rule in get_rules():
        verdict = rule.evaluate(context)
        if verdict is not None:
            return verdict
    logger.warning('no rule of CURVEGEN_RULES fired on %r at genus %d', obj, curve.genus)
    return Verdict(Decision.UNKNOWN, None, '', reason='no configured rule fired')


class Witness(namedtuple('Witness', 'kind detail')):
    __slots__ = ()
    NOT_SEMISTABLE = 'not_semistable'
    SLOPE_OFFSET = 'slope_offset'
    EULER_NONZERO = 'euler_nonzero'

    def to_dict(self):
        return {'kind': self.kind, 'detail': self.detail}


class Semiorthogonality(namedtuple('Semiorthogonality', 'possible witness oracle')):
    """
    Outcome of semiorthogonality_check

    ``possible`` True only means that no necessary condition fails. ``oracle`` holds exact Ext dimensions on the
    projective line when they could be computed, otherwise None
    """
    __slots__ = ()

    def to_dict(self):
        return {
            'result': 'possible' if self.possible else 'impossible',
            'witness': self.witness.to_dict() if self.witness else None,
            'oracle': self.oracle,
        }


def semiorthogonality_check(first, second, curve):
    """
    Necessary conditions for Ext*(first, second) = 0

    Both objects must be semistable, for finite slopes the second one must have slope mu(first) + g - 1,
    and the Euler pairing must vanish

    :param first: FormalObject
    :param second: FormalObject
    :param curve: Curve
    :return: Semiorthogonality
    """
    from curvegen.oracle import P1Object

    oracle = None
    if curve.genus == 0:
        p1_first, p1_second = P1Object.from_formal(first), P1Object.from_formal(second)
        if p1_first is not None and p1_second is not None:
            dims = p1_first.ext_dims(p1_second)
            oracle = {'ext_dims': dims, 'vanishes': not any(dims.values())}

    for name, obj in (('first', first), ('second', second)):
        if not obj.classification.semistable:
            return Semiorthogonality(False, Witness(Witness.NOT_SEMISTABLE, name), oracle)
    lam, mu = first.classification.slope, second.classification.slope
    if not lam.is_infinite and not mu.is_infinite and mu != lam + (curve.genus - 1):
        return Semiorthogonality(False, Witness(
            Witness.SLOPE_OFFSET, 'slope {} differs from {} + g - 1 = {}'.format(mu, lam, lam + (curve.genus - 1))
        ), oracle)
    chi = euler_pairing_objects(first, second, curve)
    if chi != 0:
        return Semiorthogonality(False, Witness(Witness.EULER_NONZERO, 'chi = {}'.format(chi)), oracle)
    return Semiorthogonality(True, None, oracle)


class OrthogonalClass(namedtuple('OrthogonalClass', 'slope chern description')):
    """
    Numerical shape of objects F with Ext*(E, F) = 0: ``chern`` is the smallest class of the target slope,
    None for torsion E where a skyscraper away from the support works
    """
    __slots__ = ()

    def to_dict(self):
        return {
            'target_slope': self.slope,
            'minimal_class': {'rank': self.chern.rank, 'degree': self.chern.degree} if self.chern else None,
            'description': self.description,
        }


def faltings_orthogonal_class(obj, curve):
    """
    Class of a general semistable bundle orthogonal to a semistable object

    :param obj: FormalObject, semistable
    :param curve: Curve
    :return: OrthogonalClass
    :raise NotSemistable: non-semistable objects are generators, nothing is orthogonal to them
    """
    classification = obj.classification
    if not classification.semistable:
        raise NotSemistable('object is not semistable, so it is a generator and nothing is orthogonal to it')
    if classification.kind == Kind.TORSION:
        return OrthogonalClass(INFINITY, None, 'skyscraper sheaf at any point outside the support')
    target = classification.slope + (curve.genus - 1)
    chern = minimal_class(target.value)
    return OrthogonalClass(target, chern, 'general semistable bundle of rank {} and degree {}'.format(
        chern.rank, chern.degree
    ))
