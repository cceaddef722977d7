# -*- coding: utf-8 -*-
"""
DSL module

Parser and pretty printer for analysis request files::

    # de Jong object on a genus 2 curve
    curve genus 2
    object E = bundle(r=1, d=0) + bundle(r=1, d=1, id=L)
    assume hom(E.1, L) = 0
    analyze E

A summand may carry a shift ``[n]``, meaning the piece sits in cohomological degree -n. Pieces of one object are
tagged positionally (``E.1``, ``E.2``, ...), so that assumptions can refer to them even without an ``id``
"""
import logging
from collections import OrderedDict, namedtuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput

from curvegen.engine import Assumption
from curvegen.exceptions import AnalysisError, DSLSemanticError, DSLSyntaxError, ZeroSheaf
from curvegen.location import SourceLocation
from curvegen.numerics import ChernPair, Curve
from curvegen.objects import FormalObject, SemistablePiece, Splitting

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: curve_decl? _statement*

curve_decl: "curve" "genus" SIGNED_INT

_statement: object_decl | assume_decl | query

object_decl: "object" NAME "=" summand ("+" summand)*
summand: piece shift?
shift: "[" SIGNED_INT "]"

piece: "bundle" "(" _args ")" -> bundle
     | "tors" "(" _args ")"   -> tors
_args: (arg ("," arg)*)?
arg: NAME "=" value -> keyword_arg
   | NAME           -> flag_arg
value: SIGNED_INT         -> int_value
     | NAME               -> name_value
     | NAME "^" SIGNED_INT -> power_value

assume_decl: "assume" "hom" "(" ref "," ref ")" "=" SIGNED_INT
ref: NAME ("." SIGNED_INT)?

query: "analyze" NAME         -> analyze
     | "pairing" NAME NAME    -> pairing
     | "semiorth" NAME NAME   -> semiorth
     | "faltings" NAME        -> faltings

COMMENT: /#[^\n]*/

%import common.CNAME -> NAME
%import common.SIGNED_INT
%import common.WS

%ignore WS
%ignore COMMENT
"""

parser = Lark(GRAMMAR, start='start', parser='lalr')

BUNDLE_KEYS = ('r', 'd', 'mult', 'h0', 'id', 'pow')
BUNDLE_FLAGS = ('stable', 'hn_only')
TORS_KEYS = ('len', 'mult')


class Query(object):
    """
    One query of a request, ``kind`` is one of ANALYZE, PAIRING, SEMIORTH, FALTINGS
    """
    ANALYZE = 'analyze'
    PAIRING = 'pairing'
    SEMIORTH = 'semiorth'
    FALTINGS = 'faltings'

    ARITY = {ANALYZE: 1, PAIRING: 2, SEMIORTH: 2, FALTINGS: 1}

    def __init__(self, kind, names, location=None):
        if kind not in self.ARITY:
            raise ValueError('unknown query kind {!r}'.format(kind))
        names = tuple(names)
        if len(names) != self.ARITY[kind]:
            raise ValueError('{} takes {} object names'.format(kind, self.ARITY[kind]))
        self.kind = kind
        self.names = names
        self.location = location or SourceLocation(0, 0)

    def __eq__(self, other):
        return isinstance(other, Query) and (self.kind, self.names) == (other.kind, other.names)

    def __hash__(self):
        return hash((self.kind, self.names))

    def __str__(self):
        return ' '.join((self.kind,) + self.names)

    def __repr__(self):
        return 'Query({!r})'.format(str(self))


class AnalysisRequest(object):
    """
    Parsed request: a curve, named objects, assumptions and queries

    Two requests are equal when they hold equal data, source positions are ignored
    """
    def __init__(self, curve, objects, assumptions=(), queries=(), filename=None):
        self.curve = curve
        self.objects = OrderedDict(objects)
        self.assumptions = list(assumptions)
        self.queries = list(queries)
        self.filename = filename

    def __eq__(self, other):
        return isinstance(other, AnalysisRequest) and \
            (self.curve, list(self.objects.items()), self.assumptions, self.queries) == \
            (other.curve, list(other.objects.items()), other.assumptions, other.queries)

    def __hash__(self):
        return hash((self.curve, tuple(self.objects.items()), tuple(self.assumptions), tuple(self.queries)))

    def __repr__(self):
        return 'AnalysisRequest(genus={}, objects={}, queries={})'.format(
            self.curve.genus, list(self.objects), [str(q) for q in self.queries]
        )


CurveDecl = namedtuple('CurveDecl', 'genus')
ObjectDecl = namedtuple('ObjectDecl', 'name summands')
SummandDecl = namedtuple('SummandDecl', 'kind token args shift')
Arg = namedtuple('Arg', 'key value')
AssumeDecl = namedtuple('AssumeDecl', 'source target value')
Ref = namedtuple('Ref', 'name index')
QueryDecl = namedtuple('QueryDecl', 'kind token names')


@v_args(inline=True)
class _Collector(Transformer):
    """
    Turns the parse tree into plain declarations, keeping tokens for error locations; validation happens later
    """
    def start(self, *statements):
        return list(statements)

    def curve_decl(self, genus):
        return CurveDecl(genus)

    def object_decl(self, name, *summands):
        return ObjectDecl(name, list(summands))

    def summand(self, piece, shift=None):
        kind, token, args = piece
        return SummandDecl(kind, token, args, shift)

    def shift(self, value):
        return value

    def bundle(self, *args):
        return 'bundle', args[0].key if args else None, list(args)

    def tors(self, *args):
        return 'tors', args[0].key if args else None, list(args)

    def keyword_arg(self, key, value):
        return Arg(key, value)

    def flag_arg(self, key):
        return Arg(key, None)

    def int_value(self, token):
        return 'int', token

    def name_value(self, token):
        return 'name', token

    def power_value(self, base, exponent):
        return 'power', (base, exponent)

    def assume_decl(self, source, target, value):
        return AssumeDecl(source, target, value)

    def ref(self, name, index=None):
        return Ref(name, index)

    def analyze(self, name):
        return QueryDecl(Query.ANALYZE, name, [name])

    def pairing(self, first, second):
        return QueryDecl(Query.PAIRING, first, [first, second])

    def semiorth(self, first, second):
        return QueryDecl(Query.SEMIORTH, first, [first, second])

    def faltings(self, name):
        return QueryDecl(Query.FALTINGS, name, [name])


class _Builder(object):
    """
    Validates declarations and builds an AnalysisRequest
    """
    def __init__(self, filename=None):
        self.filename = filename
        self.curve = None
        self.objects = OrderedDict()
        self.assumptions = []
        self.queries = []

    def fail(self, message, token):
        raise DSLSemanticError(message, SourceLocation.of_token(token, self.filename))

    def build(self, statements):
        handlers = {
            CurveDecl: self.add_curve,
            ObjectDecl: self.add_object,
            AssumeDecl: self.add_assumption,
            QueryDecl: self.add_query,
        }
        for statement in statements:
            handlers[type(statement)](statement)
        if self.curve is None:
            raise DSLSemanticError('missing "curve genus N" declaration', SourceLocation(1, 1, self.filename))
        objects = OrderedDict((name, obj.on_curve(self.curve)) for name, obj in self.objects.items())
        return AnalysisRequest(self.curve, objects, self.assumptions, self.queries, self.filename)

    def add_curve(self, statement):
        genus = int(statement.genus)
        if genus < 0:
            self.fail('genus must be non-negative, got {}'.format(genus), statement.genus)
        self.curve = Curve(genus)

    def add_object(self, statement):
        name = str(statement.name)
        if name in self.objects:
            self.fail('duplicate object name {!r}'.format(name), statement.name)
        summands, hn_only, powers = [], set(), set()
        for index, summand in enumerate(statement.summands, 1):
            degree = -int(summand.shift) if summand.shift is not None else 0
            piece, flags = self.build_piece(summand, '{}.{}'.format(name, index), powers)
            if 'hn_only' in flags:
                hn_only.add(degree)
            summands.append((degree, piece))
        self.objects[name] = FormalObject(summands, {d: Splitting.HN_ONLY for d in hn_only})

    def build_piece(self, summand, tag, powers):
        allowed = BUNDLE_KEYS if summand.kind == 'bundle' else TORS_KEYS
        flags_allowed = BUNDLE_FLAGS if summand.kind == 'bundle' else ()
        values, flags = {}, set()
        for arg in summand.args:
            key = str(arg.key)
            if arg.value is None:
                if key in flags_allowed:
                    flags.add(key)
                    continue
                if summand.kind == 'tors' and key in BUNDLE_FLAGS:
                    self.fail('annotation {!r} is not permitted on torsion'.format(key), arg.key)
                self.fail('unknown flag {!r} in {}(...)'.format(key, summand.kind), arg.key)
            if key not in allowed:
                if summand.kind == 'tors' and key in BUNDLE_KEYS:
                    self.fail('annotation {!r} is not permitted on torsion'.format(key), arg.key)
                self.fail('unknown argument {!r} in {}(...)'.format(key, summand.kind), arg.key)
            if key in values:
                self.fail('argument {!r} given twice'.format(key), arg.key)
            values[key] = self.check_value(key, arg)
            if key == 'pow':
                if values[key] in powers:
                    self.fail(
                        'power {}^{} declared twice, use mult= for repeated summands'.format(*values[key]), arg.key
                    )
                powers.add(values[key])

        if summand.kind == 'bundle':
            for required in ('r', 'd'):
                if required not in values:
                    self.fail('bundle(...) needs {}='.format(required), summand.token or summand.shift)
            rank, degree = values['r'], values['d']
        else:
            if 'len' not in values:
                self.fail('tors(...) needs len=', summand.token or summand.shift)
            rank, degree = 0, values['len']

        token = summand.token
        try:
            chern = ChernPair(rank, degree)
            if summand.kind == 'bundle' and chern.is_torsion:
                self.fail('bundle(...) needs positive rank, use tors(len=...) for torsion', token)
            piece = SemistablePiece(
                chern,
                multiplicity=values.get('mult', 1),
                h0=values.get('h0'),
                stable='stable' in flags,
                ident=values.get('id'),
                power=values.get('pow'),
                tag=tag,
            )
        except ZeroSheaf:
            self.fail('zero class: a piece must have positive rank or positive length', token)
        except AnalysisError as e:
            self.fail(str(e), token)
        return piece, flags

    def check_value(self, key, arg):
        kind, value = arg.value
        if key == 'id':
            if kind != 'name':
                self.fail('id= takes a name', arg.key)
            return str(value)
        if key == 'pow':
            if kind != 'power':
                self.fail('pow= takes NAME^K', arg.key)
            return str(value[0]), int(value[1])
        if kind != 'int':
            self.fail('{}= takes an integer'.format(key), arg.key)
        value = int(value)
        if key in ('r', 'h0') and value < 0:
            self.fail('{}= must be non-negative'.format(key), arg.key)
        if key == 'mult' and value < 1:
            self.fail('mult= must be positive', arg.key)
        return value

    def resolve_ref(self, ref):
        name = str(ref.name)
        if ref.index is None:
            if not any(name == p.ident for obj in self.objects.values() for p in obj.pieces):
                self.fail('no piece has id {!r}'.format(name), ref.name)
            return name
        if name not in self.objects:
            self.fail('undeclared object {!r}'.format(name), ref.name)
        index = int(ref.index)
        if not 1 <= index <= len(self.objects[name].summands):
            self.fail('object {!r} has no piece number {}'.format(name, index), ref.index)
        return '{}.{}'.format(name, index)

    def add_assumption(self, statement):
        if int(statement.value) != 0:
            self.fail('only hom(...) = 0 assumptions are supported', statement.value)
        source, target = self.resolve_ref(statement.source), self.resolve_ref(statement.target)
        self.assumptions.append(Assumption(source, target))

    def add_query(self, statement):
        for name in statement.names:
            if str(name) not in self.objects:
                self.fail('undeclared object {!r}'.format(str(name)), name)
        self.queries.append(Query(
            statement.kind, [str(n) for n in statement.names],
            SourceLocation.of_token(statement.token, self.filename)
        ))


def _describe_terminal(name):
    try:
        pattern = parser.get_terminal(name).pattern
    except KeyError:
        return name
    return '"{}"'.format(pattern.value) if pattern.type == 'str' else name


def parse(source, filename=None):
    """
    Parses request text

    :param source: DSL text
    :param filename: name used in error locations
    :return: AnalysisRequest
    :raise DSLSyntaxError: with location and expected tokens
    :raise DSLSemanticError: on duplicate names, dangling references, zero classes or annotations on torsion
    """
    try:
        tree = parser.parse(source)
    except UnexpectedInput as e:
        expected = getattr(e, 'expected', None) or getattr(e, 'allowed', None) or ()
        token = getattr(e, 'token', None)
        if token is not None and token.type in ('$END', '<EOF>'):
            message = 'unexpected end of input'
        elif token is not None:
            message = 'unexpected {!r}'.format(str(token))
        else:
            message = 'unexpected character {!r}'.format(getattr(e, 'char', '?'))
        line, column = getattr(e, 'line', None), getattr(e, 'column', None)
        location = SourceLocation(line, column, filename) if isinstance(line, int) and line > 0 \
            else SourceLocation(0, 0, filename)
        raise DSLSyntaxError(message, location, {_describe_terminal(t) for t in expected})
    request = _Builder(filename).build(_Collector().transform(tree))
    logger.info(
        'parsed %d objects, %d assumptions and %d queries from %s',
        len(request.objects), len(request.assumptions), len(request.queries), filename or '<input>'
    )
    return request


def _piece_source(piece, hn_only=False):
    if piece.is_torsion:
        args = ['len={}'.format(piece.degree)]
        if piece.multiplicity != 1:
            args.append('mult={}'.format(piece.multiplicity))
        return 'tors({})'.format(', '.join(args))
    args = ['r={}'.format(piece.rank), 'd={}'.format(piece.degree)]
    if piece.multiplicity != 1:
        args.append('mult={}'.format(piece.multiplicity))
    if piece.h0 is not None:
        args.append('h0={}'.format(piece.h0))
    if piece.stable:
        args.append('stable')
    if piece.ident is not None:
        args.append('id={}'.format(piece.ident))
    if piece.power is not None:
        args.append('pow={}^{}'.format(*piece.power))
    if hn_only:
        args.append('hn_only')
    return 'bundle({})'.format(', '.join(args))


def object_source(obj):
    """
    Renders the right hand side of an object declaration

    :param obj: FormalObject
    :return: string like ``bundle(r=1, d=0) + tors(len=1)[2]``
    """
    parts = []
    for degree, piece in obj.summands:
        text = _piece_source(piece, obj.splitting[degree] == Splitting.HN_ONLY)
        if degree:
            text += '[{}]'.format(-degree)
        parts.append(text)
    return ' + '.join(parts)


def to_source(request):
    """
    Renders a request back to DSL text, parsing the result gives an equal request

    :param request: AnalysisRequest
    :return: string
    """
    lines = ['curve genus {}'.format(request.curve.genus)]
    lines += ['object {} = {}'.format(name, object_source(obj)) for name, obj in request.objects.items()]
    lines += ['assume hom({}, {}) = 0'.format(a.source, a.target) for a in request.assumptions]
    lines += [str(q) for q in request.queries]
    return '\n'.join(lines) + '\n'
