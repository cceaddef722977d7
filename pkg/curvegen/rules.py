# -*- coding: utf-8 -*-
"""
Rules module

Each rule decides (or refuses to decide) whether an object is a classical generator of the derived category
of a curve. ``curvegen.engine.classical_status`` tries the rules listed in ``CURVEGEN_RULES`` in order and
returns the verdict of the first one that fires.

Rule ids, numbers and citations are part of the report vocabulary and should not change
"""
import logging
from collections import namedtuple

from django.utils.functional import cached_property

from curvegen.objects import Kind

logger = logging.getLogger(__name__)


class Decision(object):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'


class Verdict(object):
    """
    Three-valued answer to "is this object a classical generator", with the rule that produced it
    """
    def __init__(self, decision, rule, citation, number=None, assumptions_used=(), reason='', details=None):
        self.decision = decision
        self.rule = rule
        self.number = number
        self.citation = citation
        self.assumptions_used = tuple(assumptions_used)
        self.reason = reason
        self.details = details or {}

    @property
    def is_decided(self):
        return self.decision != Decision.UNKNOWN

    def to_dict(self):
        return {
            'decision': self.decision,
            'rule': self.rule,
            'rule_number': self.number,
            'citation': self.citation,
            'assumptions_used': [a.to_dict() for a in self.assumptions_used],
            'reason': self.reason,
            'details': self.details,
        }

    def same_as(self, other):
        return (self.decision, self.rule) == (other.decision, other.rule)

    def __repr__(self):
        return 'Verdict({}, rule={})'.format(self.decision, self.rule)


class Summand(namedtuple('Summand', 'low high degree')):
    """
    A direct summand of an object seen through its slopes: every HN factor has slope in [low, high]
    """
    __slots__ = ()

    def to_dict(self):
        return {'mu_min': self.low, 'mu_max': self.high, 'degree': self.degree}


def split_at_gaps(slopes, threshold):
    """
    Cuts a strictly decreasing slope sequence wherever two consecutive slopes differ by more than threshold

    :param slopes: list of Slope objects, strictly decreasing
    :param threshold: integer
    :return: list of runs (lists of slopes), each run is a direct summand when the cuts are known to split
    """
    runs = [[slopes[0]]]
    for previous, current in zip(slopes, slopes[1:]):
        if previous - current.value > threshold:
            runs.append([])
        runs[-1].append(current)
    return runs


def bundle_summands(obj, hn_split_threshold=None):
    """
    Known direct summands of the locally free part of an object

    Every normalized piece of a split sheaf is a summand on its own. A sheaf known only by its HN factors is a single
    summand, unless ``hn_split_threshold`` is given: HN filtrations with a gap wider than 2g - 2 split at that gap,
    so callers may pass that threshold to cut such sheaves into independent summands

    :param obj: FormalObject
    :param hn_split_threshold: optional integer threshold for cutting HN-only sheaves
    :return: list of Summand
    """
    summands = []
    for degree, sheaf in obj.sheaves.items():
        slopes = [s for s in sheaf.slopes if not s.is_infinite]
        if not slopes:
            continue
        if sheaf.is_split:
            summands.extend(Summand(s, s, degree) for s in slopes)
        elif hn_split_threshold is None:
            summands.append(Summand(slopes[-1], slopes[0], degree))
        else:
            runs = split_at_gaps(slopes, hn_split_threshold)
            summands.extend(Summand(run[-1], run[0], degree) for run in runs)
    return summands


def widest_pair(summands):
    """
    Pair of summands maximizing mu_min(G) - mu_max(F)

    :return: (F, G) summands, or None when there are fewer than two summands
    """
    if len(summands) < 2:
        return None
    lower = min(summands, key=lambda s: s.high)
    upper = max(summands, key=lambda s: s.low)
    if lower is upper:
        return None
    return lower, upper


class Context(object):
    """
    Input of a rule: the analyzed object (already coerced to the curve), the curve and the user assumptions
    """
    def __init__(self, obj, curve, assumptions=()):
        self.obj = obj.on_curve(curve)
        self.curve = curve
        self.assumptions = tuple(assumptions)

    @property
    def genus(self):
        return self.curve.genus

    @cached_property
    def classification(self):
        return self.obj.classification


class Rule(object):
    """
    Base class for rules

    Subclasses set ``id``, ``number``, ``decision`` and ``citation`` and implement ``check()``
    """
    id = None
    number = None
    decision = None
    citation = ''

    def check(self, context):
        """
        :param context: Context
        :return: None if rule does not fire, otherwise a dict with keys ``reason`` and optional ``details``
            and ``assumptions_used``
        """
        raise NotImplementedError

    def evaluate(self, context):
        """
        Runs ``check()`` and wraps its outcome in a Verdict

        :param context: Context
        :return: Verdict or None
        """
        outcome = self.check(context)
        if outcome is None:
            return None
        logger.debug('rule %s (%s) fired on %r', self.number, self.id, context.obj)
        return Verdict(
            self.decision, self.id, self.citation, number=self.number,
            assumptions_used=outcome.get('assumptions_used', ()),
            reason=outcome.get('reason', ''),
            details=outcome.get('details'),
        )


class SemistableRule(Rule):
    id = 'semistable'
    number = 1
    decision = Decision.NO
    citation = (
        'cor:semistables_form_triangulated_subcategory: semistable objects of slope lambda span a proper '
        'triangulated subcategory (torsion objects when lambda is infinite), so a semistable object is not a '
        'classical generator'
    )

    def check(self, context):
        classification = context.classification
        if classification.semistable:
            return {
                'reason': 'every piece has slope {}'.format(classification.slope),
                'details': {'slope': classification.slope},
            }


class GenusZeroRule(Rule):
    id = 'genus_zero'
    number = 2
    decision = Decision.YES
    citation = (
        'ssec:unstable_classical_generators: on the projective line every vector bundle is a direct sum of line '
        'bundles, hence every generator of the derived category is a classical generator'
    )

    def check(self, context):
        if context.genus == 0:
            return {'reason': 'genus 0 and the object is not semistable'}


class GenusOneRule(Rule):
    id = 'genus_one'
    number = 3
    decision = Decision.YES
    citation = (
        'cor:genus_one_generators: on a curve of genus one vector bundles are direct sums of semistable bundles, '
        'and for an object being not semistable, a generator and a classical generator are equivalent'
    )

    def check(self, context):
        if context.genus == 1:
            return {'reason': 'genus 1 and the object is not semistable'}


class TorsionPlusBundleRule(Rule):
    id = 'torsion_plus_bundle'
    number = 4
    decision = Decision.YES
    citation = (
        'lem:torsion_plus_bundle_generates_everything: an object that is neither torsion nor locally free is a '
        'classical generator (a skyscraper and a vector bundle already generate, by trace splitting)'
    )

    def check(self, context):
        if context.classification.kind == Kind.MIXED:
            obj = context.obj
            return {
                'reason': 'torsion and positive rank pieces are both present',
                'details': {
                    'torsion_length': sum(p.total.length for p in obj.pieces),
                    'bundle_rank': sum(p.total.rank for p in obj.pieces),
                },
            }


class SufficientlyUnstableRule(Rule):
    id = 'sufficiently_unstable'
    number = 5
    decision = Decision.YES
    citation = (
        'prop:sufficiently_unstable_bundles: vector bundles F and G with mu_max(F) + g - 1 < mu_min(G) give a '
        'classical generator F + G; an object having such a sum as a direct summand classically generates as well'
    )

    def check(self, context):
        if context.classification.kind != Kind.LOCALLY_FREE:
            return None
        pair = widest_pair(bundle_summands(context.obj))
        if pair is None:
            return None
        lower, upper = pair
        if lower.high + (context.genus - 1) < upper.low:
            return {
                'reason': 'mu_max(F) + g - 1 = {} < {} = mu_min(G)'.format(
                    lower.high + (context.genus - 1), upper.low
                ),
                'details': {'F': lower.to_dict(), 'G': upper.to_dict(), 'gap': upper.low - lower.high.value},
            }


class HarderNarasimhanGapRule(Rule):
    id = 'sufficient_instability'
    number = 6
    decision = Decision.YES
    citation = (
        'cor:sufficient_instability_criterion: a vector bundle whose HN slopes have a gap mu_i - mu_i+1 > 2g - 2 '
        'splits at the gap into two bundles that satisfy the sufficiently-unstable inequality, hence it is a '
        'classical generator'
    )

    def check(self, context):
        if context.classification.kind != Kind.LOCALLY_FREE:
            return None
        threshold = 2 * context.genus - 2
        for degree, sheaf in context.obj.sheaves.items():
            if sheaf.is_split:
                continue
            slopes = sheaf.slopes
            for index, (previous, current) in enumerate(zip(slopes, slopes[1:])):
                if previous - current.value > threshold:
                    return {
                        'reason': 'HN slopes {} and {} in degree {} differ by more than 2g - 2 = {}'.format(
                            previous, current, degree, threshold
                        ),
                        'details': {
                            'degree': degree,
                            'upper_half': slopes[:index + 1],
                            'lower_half': slopes[index + 1:],
                        },
                    }


class SimpleOrthogonalRule(Rule):
    id = 'simple_orthogonal'
    number = 7
    decision = Decision.NO
    citation = (
        'lem:extensions_do_not_generate_everything: a sum of simple objects without morphisms between '
        'non-isomorphic ones classically generates only if every object is a finite iterated extension of '
        'objects of the set; a skyscraper sheaf is not such an extension'
    )

    def check(self, context):
        from curvegen.engine import hom_vanishes

        obj = context.obj
        if context.classification.kind != Kind.LOCALLY_FREE or not obj.is_split:
            return None
        pieces = obj.pieces
        if not all(p.is_simple for p in pieces):
            return None
        used = []
        for index, first in enumerate(pieces):
            for second in pieces[index + 1:]:
                if first.same_object(second):
                    continue
                for source, target in ((first, second), (second, first)):
                    vanishing = hom_vanishes(source, target, context.assumptions)
                    if not vanishing.vanishes:
                        return None
                    if vanishing.assumption is not None and vanishing.assumption not in used:
                        used.append(vanishing.assumption)
        return {
            'reason': 'all pieces are simple and pairwise without morphisms, no torsion present',
            'assumptions_used': used,
        }


class UndecidedRule(Rule):
    id = 'undecided'
    number = 8
    decision = Decision.UNKNOWN
    citation = (
        'sec:classical_generators: no necessary and sufficient criterion for classical generation is known in general'
    )

    def check(self, context):
        return {'reason': 'the object is not semistable, yet no known criterion decides classical generation'}
