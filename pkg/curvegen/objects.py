# -*- coding: utf-8 -*-
"""
Objects module

Formal model of objects of the bounded derived category of coherent sheaves on a curve.
Every such object is isomorphic to the direct sum of its shifted cohomology sheaves, and every coherent sheaf
is a torsion sheaf plus a vector bundle, so an object is stored as a finite map from cohomological degree
to a sheaf given by its semistable pieces
"""
import itertools
from collections import OrderedDict, namedtuple

from django.utils.functional import cached_property, partition

from curvegen.exceptions import InvalidPiece, NotLocallyFree, NotSplit
from curvegen.numerics import ChernPair, euler_pairing, slope


class Splitting(object):
    SPLIT = 'split'
    """
    Pieces are genuine direct summands
    """

    HN_ONLY = 'hn_only'
    """
    Pieces are only the factors of the Harder-Narasimhan filtration, the sheaf may be a non-split extension
    """

    CHOICES = (SPLIT, HN_ONLY)


class SemistablePiece(object):
    """
    One semistable summand (or Harder-Narasimhan factor) of a sheaf, possibly repeated

    Besides the numerical class a piece may carry annotations that numerical data cannot determine:
    ``h0`` (dimension of global sections), ``stable`` flag, ``ident`` (label shared by isomorphic pieces),
    ``power`` (declares the piece as a tensor power ``(base, exponent)`` of a named line bundle)
    and ``tag`` (positional reference like ``E.2`` assigned by the parser)
    """
    def __init__(self, chern, multiplicity=1, h0=None, stable=False, ident=None, power=None, tag=None):
        if not isinstance(chern, ChernPair):
            chern = ChernPair(*chern)
        multiplicity = int(multiplicity)
        if multiplicity < 1:
            raise InvalidPiece('multiplicity must be positive, got {}'.format(multiplicity))
        if chern.is_torsion:
            if stable:
                raise InvalidPiece('torsion pieces cannot be flagged stable')
            if h0 is not None:
                raise InvalidPiece('h0 annotation is permitted only on positive rank pieces')
            if power is not None:
                raise InvalidPiece('torsion pieces cannot be powers of a line bundle')
        if h0 is not None and int(h0) < 0:
            raise InvalidPiece('h0 must be non-negative, got {}'.format(h0))
        if power is not None and chern.rank != 1:
            raise InvalidPiece('only line bundles can be powers of a line bundle')
        self.chern = chern
        self.multiplicity = multiplicity
        self.h0 = None if h0 is None else int(h0)
        self.stable = bool(stable)
        self.ident = ident
        self.power = None if power is None else (str(power[0]), int(power[1]))
        self.tag = tag

    @property
    def rank(self):
        return self.chern.rank

    @property
    def degree(self):
        return self.chern.degree

    @property
    def slope(self):
        return slope(self.chern)

    @property
    def is_torsion(self):
        return self.chern.is_torsion

    @property
    def total(self):
        """
        Class of all copies together
        """
        return self.chern * self.multiplicity

    @property
    def is_simple(self):
        """
        Line bundles and stable bundles have only scalar endomorphisms
        """
        return self.rank == 1 or self.stable

    @property
    def refs(self):
        """
        Names an assumption may use to point at this piece
        """
        return {r for r in (self.ident, self.tag) if r is not None}

    @property
    def is_annotated(self):
        return self.h0 is not None or self.stable or self.ident is not None or self.power is not None

    def with_class(self, chern, stable=None):
        """
        Piece of another class with section counts and labels erased, since those do not transport
        along twists, duals or tensor products

        :param chern: new ChernPair
        :param stable: new stable flag, by default it is kept (twists and duals preserve stability)
        :return: SemistablePiece
        """
        return SemistablePiece(
            chern, multiplicity=self.multiplicity, stable=self.stable if stable is None else stable
        )

    def same_object(self, other):
        """
        Whether two pieces are presumed isomorphic: only pieces with equal user labels and equal classes are
        """
        return self.ident is not None and self.ident == other.ident and self.chern == other.chern

    def _key(self):
        return self.chern, self.multiplicity, self.h0, self.stable, self.ident, self.power, self.tag

    def __eq__(self, other):
        return isinstance(other, SemistablePiece) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        attrs = ['({}, {})'.format(self.rank, self.degree)]
        if self.multiplicity != 1:
            attrs.append('x{}'.format(self.multiplicity))
        for name in ('h0', 'ident', 'power', 'tag'):
            if getattr(self, name) is not None:
                attrs.append('{}={!r}'.format(name, getattr(self, name)))
        if self.stable:
            attrs.append('stable')
        return 'SemistablePiece({})'.format(', '.join(attrs))


class FormalSheaf(object):
    """
    Coherent sheaf given by its semistable pieces, either as a genuine direct sum or as HN factors only
    """
    def __init__(self, pieces, splitting=Splitting.SPLIT):
        pieces = tuple(pieces)
        if not pieces:
            raise InvalidPiece('a sheaf needs at least one piece')
        if splitting not in Splitting.CHOICES:
            raise InvalidPiece('unknown splitting {!r}'.format(splitting))
        self.pieces = pieces
        self.splitting = splitting

    @property
    def is_split(self):
        return self.splitting == Splitting.SPLIT

    @cached_property
    def normalized(self):
        return hn_normalize(self)

    @cached_property
    def total(self):
        pieces = iter(self.pieces)
        total = next(pieces).total
        for piece in pieces:
            total += piece.total
        return total

    @property
    def slopes(self):
        """
        Strictly decreasing sequence of slopes of the normalized pieces
        """
        return [p.slope for p in self.normalized.pieces]

    def __eq__(self, other):
        return isinstance(other, FormalSheaf) and (self.pieces, self.splitting) == (other.pieces, other.splitting)

    def __hash__(self):
        return hash((self.pieces, self.splitting))

    def __repr__(self):
        return 'FormalSheaf({!r}, {!r})'.format(list(self.pieces), self.splitting)


def _merge(group):
    """
    Merges pieces of one slope

    A lone piece with multiplicity 1 is kept as it is. Copies of one labelled object stay one piece with the
    multiplicities added up and its annotations kept. Otherwise the block becomes a single piece of the summed
    class, known section counts add up, labels and stability flags are dropped
    """
    first = group[0]
    if len(group) == 1 and first.multiplicity == 1:
        return first
    if all(first.same_object(p) for p in group):
        return SemistablePiece(
            first.chern,
            multiplicity=sum(p.multiplicity for p in group),
            h0=first.h0 if all(p.h0 == first.h0 for p in group) else None,
            stable=any(p.stable for p in group),
            ident=first.ident,
            power=first.power if all(p.power == first.power for p in group) else None,
        )
    total = first.total
    for piece in group[1:]:
        total += piece.total
    h0 = None
    if all(p.h0 is not None for p in group):
        h0 = sum(p.h0 * p.multiplicity for p in group)
    return SemistablePiece(total, h0=h0)


def hn_normalize(sheaf):
    """
    Brings a sheaf to the canonical form: one piece per slope, slopes strictly decreasing (torsion first)

    Idempotent, preserves the total class

    :param sheaf: FormalSheaf
    :return: FormalSheaf with the same splitting
    """
    groups = OrderedDict()
    for piece in sorted(sheaf.pieces, key=lambda p: p.slope, reverse=True):
        groups.setdefault(piece.slope, []).append(piece)
    return FormalSheaf([_merge(g) for g in groups.values()], sheaf.splitting)


def mu_extremes(sheaf):
    """
    Largest and smallest slope of a sheaf, i.e. the slopes of the first and the last HN factor

    :param sheaf: FormalSheaf
    :return: pair of Slope objects (mu_max, mu_min)
    """
    pieces = sheaf.normalized.pieces
    return pieces[0].slope, pieces[-1].slope


class Kind(object):
    TORSION = 'torsion'
    LOCALLY_FREE = 'locally_free'
    MIXED = 'mixed'


class Classification(namedtuple('Classification', 'kind slope')):
    """
    Kind of an object and its common slope, slope is None for objects that are not semistable
    """
    __slots__ = ()

    @property
    def semistable(self):
        return self.slope is not None

    def __str__(self):
        if self.semistable:
            return '{}, semistable of slope {}'.format(self.kind, self.slope)
        return '{}, not semistable'.format(self.kind)


class FormalObject(object):
    """
    Object of the bounded derived category of a curve, the direct sum of its shifted cohomology sheaves

    Stored as summands ``(degree, piece)`` in declaration order; degree ``i`` means the piece is a summand
    of the i-th cohomology sheaf, i.e. it contributes ``piece[-i]``
    """
    def __init__(self, summands, splitting=None):
        """
        :param summands: iterable of (cohomological degree, SemistablePiece) pairs
        :param splitting: optional mapping degree -> Splitting, degrees missing from it are split
        """
        self.summands = tuple((int(d), p) for d, p in summands)
        if not self.summands:
            raise InvalidPiece('an object needs at least one piece')
        splitting = splitting or {}
        self.splitting = {d: splitting.get(d, Splitting.SPLIT) for d in self.degrees}

    @cached_property
    def degrees(self):
        return sorted({d for d, _ in self.summands})

    @cached_property
    def sheaves(self):
        """
        :return: OrderedDict degree -> FormalSheaf, by increasing degree
        """
        grouped = OrderedDict((d, []) for d in self.degrees)
        for degree, piece in self.summands:
            grouped[degree].append(piece)
        return OrderedDict((d, FormalSheaf(p, self.splitting[d])) for d, p in grouped.items())

    @property
    def pieces(self):
        return [p for _, p in self.summands]

    @property
    def is_split(self):
        return all(s == Splitting.SPLIT for s in self.splitting.values())

    @property
    def is_annotated(self):
        return any(p.is_annotated for p in self.pieces)

    @cached_property
    def classification(self):
        return classify(self)

    @cached_property
    def slopes(self):
        """
        All slopes of the normalized pieces, over all degrees, strictly decreasing
        """
        return sorted({s for sheaf in self.sheaves.values() for s in sheaf.slopes}, reverse=True)

    def mu_extremes(self):
        return self.slopes[0], self.slopes[-1]

    @cached_property
    def total_class(self):
        """
        Sum of classes of all cohomology sheaves, signs ignored
        """
        return ChernPair(
            sum(p.total.rank for p in self.pieces), sum(p.total.degree for p in self.pieces)
        )

    @cached_property
    def euler_class(self):
        """
        Class in the numerical Grothendieck group: alternating sum over cohomological degrees

        :return: pair (rank, degree) of integers, may be zero or negative
        """
        rank = sum((-1) ** (d % 2) * p.total.rank for d, p in self.summands)
        degree = sum((-1) ** (d % 2) * p.total.degree for d, p in self.summands)
        return rank, degree

    def on_curve(self, curve):
        """
        Coerces the object to what is known on the given curve: on the projective line every vector bundle
        is a direct sum of line bundles, so every sheaf is split

        :param curve: Curve
        :return: FormalObject
        """
        if curve.genus == 0 and not self.is_split:
            return FormalObject(self.summands)
        return self

    def map_pieces(self, function):
        """
        :param function: callable (degree, piece) -> (degree, piece)
        :return: FormalObject with the same splitting per (mapped) degree
        """
        summands = [function(d, p) for d, p in self.summands]
        splitting = {}
        for (old, _), (new, _) in zip(self.summands, summands):
            splitting[new] = self.splitting[old]
        return FormalObject(summands, splitting)

    def __eq__(self, other):
        return isinstance(other, FormalObject) and \
            (self.summands, self.splitting) == (other.summands, other.splitting)

    def __hash__(self):
        return hash((self.summands, tuple(sorted(self.splitting.items()))))

    def __repr__(self):
        return 'FormalObject({!r})'.format(list(self.summands))


def classify(obj):
    """
    Torsion / locally free / mixed kind, and semistability of an object

    An object is semistable of slope lambda if every piece in every degree has slope lambda
    (lambda is infinite for torsion objects)

    :param obj: FormalObject
    :return: Classification
    """
    torsion, bundles = partition(lambda p: not p.is_torsion, obj.pieces)
    if not bundles:
        kind = Kind.TORSION
    elif not torsion:
        kind = Kind.LOCALLY_FREE
    else:
        kind = Kind.MIXED
    slopes = {p.slope for p in obj.pieces}
    return Classification(kind, slopes.pop() if len(slopes) == 1 else None)


def shift(obj, n):
    """
    Shift functor ``[n]``: a sheaf sitting in degree i moves to degree i - n, annotations are kept
    """
    return obj.map_pieces(lambda d, p: (d - n, p))


def twist(obj, t):
    """
    Tensor product with a line bundle of degree t: (r, d) -> (r, d + r t), torsion unchanged
    """
    def _twist(degree, piece):
        if piece.is_torsion:
            return degree, piece.with_class(piece.chern)
        return degree, piece.with_class(ChernPair(piece.rank, piece.degree + piece.rank * t))
    return obj.map_pieces(_twist)


def _check_dualizable(obj, operation):
    if obj.classification.kind != Kind.LOCALLY_FREE:
        raise NotLocallyFree('{} requires a locally free object'.format(operation))
    if not obj.is_split:
        raise NotSplit('{} requires a split object, HN factors of the result are unknown'.format(operation))


def dual(obj):
    """
    Derived dual of a locally free split object: (r, d) -> (r, -d), degree i -> -i
    """
    _check_dualizable(obj, 'dual')
    return FormalObject(
        (-d, p.with_class(ChernPair(p.rank, -p.degree))) for d, p in obj.summands
    )


def tensor(first, second):
    """
    Tensor product of two locally free split objects, computed piece by piece:
    (r1, d1) x (r2, d2) = (r1 r2, r1 d2 + r2 d1) in degree i + j

    A product is flagged stable when one factor is a line bundle and the other is simple
    """
    _check_dualizable(first, 'tensor')
    _check_dualizable(second, 'tensor')
    summands = []
    for (i, p), (j, q) in itertools.product(first.summands, second.summands):
        chern = ChernPair(p.rank * q.rank, p.rank * q.degree + q.rank * p.degree)
        stable = (p.rank == 1 and q.is_simple) or (q.rank == 1 and p.is_simple)
        piece = SemistablePiece(chern, multiplicity=p.multiplicity * q.multiplicity, stable=stable and chern.rank > 1)
        summands.append((i + j, piece))
    return FormalObject(summands)


def serre_functor(obj, curve):
    """
    Serre functor of the curve, ``- (x) omega [1]``
    """
    return shift(twist(obj, curve.canonical_degree), 1)


def euler_pairing_objects(first, second, curve):
    """
    Euler pairing of two objects: sum over pieces of (-1)^(i - j) chi(piece_i, piece_j)

    :param first: FormalObject
    :param second: FormalObject
    :param curve: Curve
    :return: integer
    """
    return sum(
        (-1) ** ((i - j) % 2) * euler_pairing(p.total, q.total, curve)
        for (i, p), (j, q) in itertools.product(first.summands, second.summands)
    )
