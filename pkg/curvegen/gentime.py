# -*- coding: utf-8 -*-
"""
Gentime module

Upper bounds on the generating time of classical generators of the derived category of a curve.

Generating time of G is the smallest i >= 1 with every object lying in <G>_(i+1), i.e. built from G with at most
i cones. Nothing here constructs the subcategories <G>_i, bounds come from a table of known shapes combined with
the composition law: if F lies in <G>_b then Theta(G) <= b (Theta(F) + 1) - 1.

Any bound for a direct summand of an object is a bound for the object itself, since <G>_i grows when G does
"""
from collections import defaultdict, namedtuple

from curvegen.exceptions import VerdictMismatch
from curvegen.objects import Kind
from curvegen.rules import Context, Decision, bundle_summands, widest_pair


class Step(namedtuple('Step', 'rule citation value')):
    __slots__ = ()

    def to_dict(self):
        return {'rule': self.rule, 'citation': self.citation, 'value': self.value}


class GenTimeBound(object):
    """
    Upper bound on generating time, ``value`` None means no bound is known
    """
    def __init__(self, value=None, derivation=(), note='', alternatives=()):
        if value is not None and value < 1:
            raise ValueError('generating time is at least 1, got {}'.format(value))
        self.value = value
        self.derivation = tuple(derivation)
        self.note = note
        self.alternatives = tuple(alternatives)

    @property
    def unbounded(self):
        return self.value is None

    def to_dict(self):
        return {
            'value': self.value,
            'unbounded': self.unbounded,
            'note': self.note,
            'derivation': [s.to_dict() for s in self.derivation],
            'alternatives': [{'rule': rule, 'value': value} for rule, value in self.alternatives],
        }

    def __repr__(self):
        return 'GenTimeBound({})'.format('unbounded' if self.unbounded else self.value)


FAST_GENERATOR_CITATION = (
    'eq:fast_curve_generator: for a line bundle L of degree at least 8g the generating time of '
    'L^-1 + O + L + L^2 is equal to one'
)
SKYSCRAPER_STEP_CITATION = (
    'lem:line_plus_skyscraper_generating_time: O(-m p) lies in <O + O_p>_(m+1) by the sequences '
    '0 -> O(-(m+1)p) -> O(-mp) -> O_p -> 0'
)
COMPOSITION_CITATION = 'cor:generating_time_bound: if F lies in <G>_b then Theta(G) <= b (Theta(F) + 1) - 1'
LINE_PLUS_SKYSCRAPER_CITATION = 'lem:line_plus_skyscraper_generating_time: Theta(O_C + O_p) <= 48g + 1'
TORSION_STEP_CITATION = (
    'lem:torsion_plus_bundle_generating_time: a skyscraper at a point of the support of a torsion sheaf T '
    'lies in <T>_2'
)
TORSION_PLUS_BUNDLE_CITATION = (
    'lem:torsion_plus_bundle_generating_time: an object that is neither torsion nor locally free has '
    'Theta <= 96g + 3'
)
COKERNEL_STEP_CITATION = (
    'lem:sufficiently_unstable_generating_time: mu_max(F) + 2g < mu_min(G) makes F^v (x) G (x) O(-p) '
    'globally generated, giving a map F^r -> G with a non-zero torsion cokernel in <F + G>_2'
)
SUFFICIENTLY_UNSTABLE_CITATION = (
    'lem:sufficiently_unstable_generating_time: vector bundles F, G with mu_max(F) + 2g < mu_min(G) have '
    'Theta(F + G) <= 192g + 7'
)
GENUS_ONE_CITATION = (
    'ssec:slow_generators: on a curve of genus one any classical generator has generating time at most 4'
)
GLOBAL_GENERATION_CITATION = (
    'lem:effective_global_generation_bound: a semistable bundle of slope greater than 2g - 1 is globally '
    'generated and has no higher cohomology'
)
OPEN_BOUND_NOTE = (
    'classical generator, but no bound on its generating time in terms of the genus is known '
    '(bounds exist for a slope gap wider than 2g, not between g - 1 and 2g)'
)


def compose_bound(a, b):
    """
    Composition law for generating times

    :param a: Theta(F), a >= 0
    :param b: F lies in <G>_b, b >= 1
    :return: upper bound b (a + 1) - 1 on Theta(G)
    """
    a, b = int(a), int(b)
    if a < 0 or b < 1:
        raise ValueError('compose_bound needs a >= 0 and b >= 1, got a={}, b={}'.format(a, b))
    return b * (a + 1) - 1


def fast_generator_bound(curve):
    return [Step('fast_generator', FAST_GENERATOR_CITATION, 1)]


def line_plus_skyscraper_bound(curve):
    """
    Derivation of Theta(O_C + O_p) <= 48g + 1

    Twisting the fast generator by a power of O(8g p) gives O + O(-8gp) + O(-16gp) + O(-24gp), which lies in
    <O + O_p>_(24g+1)

    :return: list of Step, last value is the bound
    """
    depth = 24 * curve.genus + 1
    return [
        Step('fast_generator', FAST_GENERATOR_CITATION, 1),
        Step('skyscraper_filtration', SKYSCRAPER_STEP_CITATION, depth),
        Step('line_plus_skyscraper', LINE_PLUS_SKYSCRAPER_CITATION, compose_bound(1, depth)),
    ]


def torsion_plus_bundle_bound(curve):
    """
    Derivation of Theta(E + T) <= 96g + 3: F lies in <<E + T>_2>_(48g+2), a subset of <E + T>_(96g+4)
    """
    steps = line_plus_skyscraper_bound(curve)
    inner = steps[-1].value
    return steps + [
        Step('skyscraper_from_torsion', TORSION_STEP_CITATION, 2),
        Step('torsion_plus_bundle', TORSION_PLUS_BUNDLE_CITATION, compose_bound(inner, 2)),
    ]


def sufficiently_unstable_bound(curve):
    """
    Derivation of Theta(F + G) <= 192g + 7 via a torsion cokernel T in <F + G>_2
    """
    steps = torsion_plus_bundle_bound(curve)
    inner = steps[-1].value
    return steps + [
        Step('torsion_cokernel', COKERNEL_STEP_CITATION, 2),
        Step('sufficiently_unstable_bound', SUFFICIENTLY_UNSTABLE_CITATION, compose_bound(inner, 2)),
    ]


def genus_one_bound(curve):
    return [Step('genus_one_bound', GENUS_ONE_CITATION, 4)]


def globally_generated_check(piece, curve):
    """
    Sufficient condition for global generation of a semistable piece: slope > 2g - 1

    :param piece: SemistablePiece of positive rank
    :param curve: Curve
    :return: True when guaranteed globally generated, False when this criterion does not apply
    """
    if piece.is_torsion:
        raise ValueError('global generation check needs a positive rank piece')
    return piece.slope > 2 * curve.genus - 1


def has_fast_generator(obj, curve):
    """
    Looks for summands L^(k-1), L^k, L^(k+1), L^(k+2) of one named line bundle L with deg L >= 8g

    Pieces must be declared with ``power`` annotations; degrees must be consistent with the exponents
    """
    by_base = defaultdict(dict)
    for degree, sheaf in obj.sheaves.items():
        if not sheaf.is_split:
            continue
        for piece in sheaf.pieces:
            if piece.power is not None:
                base, exponent = piece.power
                by_base[base].setdefault(exponent, piece.degree)
    for base, degrees in by_base.items():
        steps = {d // e for e, d in degrees.items() if e and d % e == 0}
        if len(steps) != 1 or not all(d == e * list(steps)[0] for e, d in degrees.items()):
            continue
        step = steps.pop()
        if step < max(8 * curve.genus, 1):
            continue
        if any(all(e in degrees for e in range(k - 1, k + 3)) for k in degrees):
            return True
    return False


def has_line_plus_skyscraper(obj):
    """
    Whether the object has a line bundle summand and a skyscraper summand

    Torsion always splits off a coherent sheaf on a curve, so a torsion piece of length 1 is a summand; twisting by
    the line bundle M turns O + O_p into M + O_p, so any line bundle will do
    """
    has_skyscraper = any(p.is_torsion and p.chern.length == 1 for p in obj.pieces)
    has_line = any(
        p.rank == 1 for sheaf in obj.sheaves.values() if sheaf.is_split for p in sheaf.pieces
    )
    return has_skyscraper and has_line


def has_wide_gap(obj, curve):
    """
    Whether two summands F, G satisfy mu_max(F) + 2g < mu_min(G); HN-only sheaves are first cut at gaps wider
    than 2g - 2, where their filtrations split
    """
    pair = widest_pair(bundle_summands(obj, hn_split_threshold=2 * curve.genus - 2))
    if pair is None:
        return False
    lower, upper = pair
    return lower.high + 2 * curve.genus < upper.low


def _check_verdict(obj, curve, verdict):
    """
    Re-runs only the rule that produced the verdict, which has to fire on obj again
    """
    from curvegen.engine import get_rules

    if verdict.decision == Decision.YES and obj.classification.semistable:
        raise VerdictMismatch('verdict {!r} says yes for a semistable object'.format(verdict))
    if verdict.rule is None:
        return
    rule = next((r for r in get_rules() if r.id == verdict.rule), None)
    if rule is None or rule.decision != verdict.decision \
            or rule.check(Context(obj, curve, verdict.assumptions_used)) is None:
        raise VerdictMismatch('verdict {!r} was not computed for this object on this curve'.format(verdict))


def gentime_upper_bound(obj, curve, verdict):
    """
    Smallest known upper bound on the generating time of an object

    :param obj: FormalObject
    :param curve: Curve
    :param verdict: Verdict computed by classical_status for obj on curve
    :return: GenTimeBound
    :raise VerdictMismatch: if verdict does not belong to obj
    """
    obj = obj.on_curve(curve)
    _check_verdict(obj, curve, verdict)
    if verdict.decision != Decision.YES:
        return GenTimeBound(note='not known to be a classical generator')

    candidates = []
    if has_fast_generator(obj, curve):
        candidates.append(fast_generator_bound(curve))
    if curve.genus == 1:
        candidates.append(genus_one_bound(curve))
    if has_line_plus_skyscraper(obj):
        candidates.append(line_plus_skyscraper_bound(curve))
    if obj.classification.kind == Kind.MIXED:
        candidates.append(torsion_plus_bundle_bound(curve))
    if obj.classification.kind == Kind.LOCALLY_FREE and has_wide_gap(obj, curve):
        candidates.append(sufficiently_unstable_bound(curve))

    if not candidates:
        return GenTimeBound(note=OPEN_BOUND_NOTE)
    candidates.sort(key=lambda steps: steps[-1].value)
    best = candidates[0]
    return GenTimeBound(
        best[-1].value,
        best,
        alternatives=[(steps[-1].rule, steps[-1].value) for steps in candidates[1:]],
    )
