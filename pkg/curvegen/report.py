# -*- coding: utf-8 -*-
"""
Report module

Runs the queries of an AnalysisRequest and renders the results, either as a JSON document
(schema described in ``docs/report.rst``) or as plain text
"""
import json
import logging
from collections import OrderedDict
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from curvegen.conf import settings
from curvegen.dsl import Query, object_source
from curvegen.engine import faltings_orthogonal_class, is_generator, semiorthogonality_check
from curvegen.exceptions import AnalysisError, QueryError
from curvegen.gentime import globally_generated_check, gentime_upper_bound
from curvegen.numerics import Slope, hom_nonzero_by_riemann_roch
from curvegen.objects import euler_pairing_objects, serre_functor
from curvegen.registry import verdict_registry
from curvegen.rules import Decision

logger = logging.getLogger(__name__)

CHARACTERISTIC = 0
"""
Ground field characteristic, every report is computed over the complex numbers
"""


class ReportEncoder(DjangoJSONEncoder):
    """
    JSON encoder writing exact slopes and rationals as strings, e.g. ``"3/2"`` or ``"inf"``
    """
    def default(self, o):
        if isinstance(o, (Fraction, Slope)):
            return str(o)
        return super(ReportEncoder, self).default(o)


class Report(object):
    """
    Outcome of a run: the request data and one result dict per query, in query order
    """
    def __init__(self, request, results):
        self.request = request
        self.results = list(results)

    def to_dict(self):
        request = self.request
        return OrderedDict([
            ('characteristic', CHARACTERISTIC),
            ('curve', {'genus': request.curve.genus}),
            ('objects', OrderedDict((name, object_source(obj)) for name, obj in request.objects.items())),
            ('assumptions', [a.to_dict() for a in request.assumptions]),
            ('queries', self.results),
        ])

    def to_json(self, indent=None):
        """
        :param indent: indentation, defaults to ``CURVEGEN_JSON_INDENT``
        :return: JSON text, byte-identical for equal requests
        """
        if indent is None:
            indent = settings.CURVEGEN_JSON_INDENT
        return json.dumps(self.to_dict(), cls=ReportEncoder, sort_keys=True, indent=indent)

    def to_text(self):
        return render_text(self)


def relevant_assumptions(obj, assumptions):
    """
    Assumptions whose both ends name pieces of the object
    """
    refs = set()
    for piece in obj.pieces:
        refs |= piece.refs
    return [a for a in assumptions if a.source in refs and a.target in refs]


def piece_dict(piece):
    data = OrderedDict([
        ('rank', piece.rank),
        ('degree', piece.degree),
        ('slope', piece.slope),
        ('multiplicity', piece.multiplicity),
    ])
    for name in ('h0', 'ident', 'tag'):
        if getattr(piece, name) is not None:
            data['id' if name == 'ident' else name] = getattr(piece, name)
    if piece.power is not None:
        data['power'] = {'base': piece.power[0], 'exponent': piece.power[1]}
    if piece.stable:
        data['stable'] = True
    return data


def invariants(obj):
    """
    Invariants block of an analyze result
    """
    mu_max, mu_min = obj.mu_extremes()
    classification = obj.classification
    euler_rank, euler_degree = obj.euler_class
    return OrderedDict([
        ('total_rank', obj.total_class.rank),
        ('total_degree', obj.total_class.degree),
        ('euler_class', {'rank': euler_rank, 'degree': euler_degree}),
        ('mu_max', mu_max),
        ('mu_min', mu_min),
        ('classification', {
            'kind': classification.kind,
            'semistable': classification.semistable,
            'slope': classification.slope,
        }),
        ('sheaves', OrderedDict(
            (str(degree), {
                'splitting': sheaf.splitting,
                'pieces': [piece_dict(p) for p in sheaf.pieces],
                'hn_slopes': sheaf.slopes,
            }) for degree, sheaf in obj.sheaves.items()
        )),
    ])


def analyze(request, name):
    obj, curve = request.objects[name], request.curve
    verdict = verdict_registry.status(obj, curve, relevant_assumptions(obj, request.assumptions))
    bound = gentime_upper_bound(obj, curve, verdict)
    return OrderedDict([
        ('invariants', invariants(obj)),
        ('is_generator', is_generator(obj, curve)),
        ('classical', verdict.to_dict()),
        ('gentime', bound.to_dict()),
        ('global_generation', [
            {'piece': p.tag, 'slope': p.slope, 'globally_generated': globally_generated_check(p, curve)}
            for p in obj.pieces if not p.is_torsion
        ]),
    ])


def pairing(request, first_name, second_name):
    first, second = request.objects[first_name], request.objects[second_name]
    curve = request.curve
    hom_nonzero = []
    for i, p in first.summands:
        for j, q in second.summands:
            if i != j or p.is_torsion or q.is_torsion:
                continue
            if hom_nonzero_by_riemann_roch(p.chern, q.chern, curve):
                hom_nonzero.append([p.tag, q.tag])
    return OrderedDict([
        ('euler_pairing', euler_pairing_objects(first, second, curve)),
        ('euler_pairing_reversed', euler_pairing_objects(second, first, curve)),
        ('serre_dual_pairing', euler_pairing_objects(second, serre_functor(first, curve), curve)),
        ('hom_nonzero', hom_nonzero),
    ])


def semiorth(request, first_name, second_name):
    first, second = request.objects[first_name], request.objects[second_name]
    result = semiorthogonality_check(first, second, request.curve).to_dict()
    result['euler_pairing'] = euler_pairing_objects(first, second, request.curve)
    return result


def faltings(request, name):
    return faltings_orthogonal_class(request.objects[name], request.curve).to_dict()


HANDLERS = {
    Query.ANALYZE: analyze,
    Query.PAIRING: pairing,
    Query.SEMIORTH: semiorth,
    Query.FALTINGS: faltings,
}


def run(request):
    """
    Evaluates every query of a request

    :param request: AnalysisRequest
    :return: Report
    :raise QueryError: wrapping the first AnalysisError, with the failing query attached
    """
    results = []
    for query in request.queries:
        try:
            result = HANDLERS[query.kind](request, *query.names)
        except AnalysisError as e:
            logger.warning('%s: query %r failed: %s', query.location, str(query), e)
            raise QueryError(query, e)
        results.append(OrderedDict([('query', str(query)), ('kind', query.kind), ('result', result)]))
    return Report(request, results)


DECISION_LABELS = {
    Decision.YES: 'yes, split generator',
    Decision.NO: 'no, not a split generator',
    Decision.UNKNOWN: 'unknown',
}


def _text_analyze(lines, result):
    inv = result['invariants']
    lines.append('  rank {}, degree {}, mu_max {}, mu_min {}'.format(
        inv['total_rank'], inv['total_degree'], inv['mu_max'], inv['mu_min']
    ))
    classification = inv['classification']
    lines.append('  {}, {}'.format(
        classification['kind'],
        'semistable of slope {}'.format(classification['slope']) if classification['semistable']
        else 'not semistable'
    ))
    lines.append('  weak generator: {}'.format('yes' if result['is_generator'] else 'no'))
    verdict = result['classical']
    lines.append('  classical generator: {}'.format(DECISION_LABELS[verdict['decision']]))
    if verdict['rule']:
        lines.append('    rule {} ({}): {}'.format(verdict['rule_number'], verdict['rule'], verdict['citation']))
    if verdict['reason']:
        lines.append('    {}'.format(verdict['reason']))
    for assumption in verdict['assumptions_used']:
        lines.append('    assuming hom({}, {}) = 0'.format(assumption['source'], assumption['target']))
    bound = result['gentime']
    if bound['unbounded']:
        lines.append('  generating time: no bound{}'.format(': ' + bound['note'] if bound['note'] else ''))
    else:
        lines.append('  generating time: at most {}'.format(bound['value']))
        for step in bound['derivation']:
            lines.append('    {} = {}: {}'.format(step['rule'], step['value'], step['citation']))
    generated = [g['piece'] for g in result['global_generation'] if g['globally_generated']]
    if generated:
        lines.append('  globally generated: {}'.format(', '.join(generated)))


def _text_pairing(lines, result):
    lines.append('  chi = {}, reversed chi = {}, chi with Serre dual = {}'.format(
        result['euler_pairing'], result['euler_pairing_reversed'], result['serre_dual_pairing']
    ))
    for source, target in result['hom_nonzero']:
        lines.append('  Hom({}, {}) is non-zero by Riemann-Roch'.format(source, target))


def _text_semiorth(lines, result):
    lines.append('  {} (chi = {})'.format(result['result'], result['euler_pairing']))
    if result['witness']:
        lines.append('  witness: {} {}'.format(result['witness']['kind'], result['witness']['detail']))
    if result['oracle'] is not None:
        lines.append('  projective line: Ext dimensions {}, {}'.format(
            result['oracle']['ext_dims'], 'vanishing' if result['oracle']['vanishes'] else 'not vanishing'
        ))


def _text_faltings(lines, result):
    lines.append('  orthogonal slope {}: {}'.format(result['target_slope'], result['description']))


TEXT_RENDERERS = {
    Query.ANALYZE: _text_analyze,
    Query.PAIRING: _text_pairing,
    Query.SEMIORTH: _text_semiorth,
    Query.FALTINGS: _text_faltings,
}


def render_text(report):
    """
    Human readable form of a report, one block per query
    """
    lines = ['curve of genus {} (characteristic {})'.format(report.request.curve.genus, CHARACTERISTIC)]
    for result in report.results:
        lines.append('')
        lines.append(result['query'])
        TEXT_RENDERERS[result['kind']](lines, result['result'])
    return '\n'.join(lines) + '\n'
