# -*- coding: utf-8 -*-
"""
Numerics module

Exact numerical invariants of coherent sheaves on a smooth projective curve: slopes, Chern pairs,
the Euler pairing given by Riemann-Roch and the numerical effect of twisting by the canonical bundle.
All arithmetic is done on integers and ``fractions.Fraction``, floats never appear
"""
import functools
from fractions import Fraction

from curvegen.exceptions import InvalidClass, ZeroSheaf


@functools.total_ordering
class Slope(object):
    """
    Extended slope: a rational number or infinity, infinity being the slope of torsion sheaves
    """
    __slots__ = ('value',)

    def __init__(self, value=None):
        """
        :param value: rational slope, None for infinity
        """
        object.__setattr__(self, 'value', None if value is None else Fraction(value))

    def __setattr__(self, key, value):
        raise AttributeError('Slope is immutable')

    def __reduce__(self):
        return Slope, (self.value,)

    @property
    def is_infinite(self):
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, Slope):
            if isinstance(other, (int, Fraction)):
                return self.value is not None and self.value == other
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        if not isinstance(other, Slope):
            if isinstance(other, (int, Fraction)):
                other = Slope(other)
            else:
                return NotImplemented
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __hash__(self):
        return hash(('slope', self.value))

    def __add__(self, other):
        """
        Translates slope by a rational, infinity absorbs everything
        """
        if isinstance(other, Slope):
            if other.is_infinite:
                return INFINITY
            other = other.value
        return self if self.is_infinite else Slope(self.value + other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Slope):
            if other.is_infinite:
                raise ValueError('cannot subtract an infinite slope')
            other = other.value
        return self + (-Fraction(other))

    def __neg__(self):
        if self.is_infinite:
            raise ValueError('cannot negate an infinite slope')
        return Slope(-self.value)

    def __str__(self):
        return 'inf' if self.is_infinite else str(self.value)

    def __repr__(self):
        return 'Slope({})'.format(self)


INFINITY = Slope()


class ChernPair(object):
    """
    Numerical class of a coherent sheaf on a curve: rank and degree

    Rank zero classes are torsion classes, their degree is the length of the sheaf
    """
    __slots__ = ('rank', 'degree')

    def __init__(self, rank, degree):
        rank, degree = int(rank), int(degree)
        if rank < 0:
            raise InvalidClass('rank must be non-negative, got {}'.format(rank))
        if rank == 0 and degree == 0:
            raise ZeroSheaf('zero class (rank 0, degree 0)')
        if rank == 0 and degree < 0:
            raise InvalidClass('torsion class must have positive length, got {}'.format(degree))
        object.__setattr__(self, 'rank', rank)
        object.__setattr__(self, 'degree', degree)

    def __setattr__(self, key, value):
        raise AttributeError('ChernPair is immutable')

    def __reduce__(self):
        return ChernPair, (self.rank, self.degree)

    @property
    def is_torsion(self):
        return self.rank == 0

    @property
    def length(self):
        """
        Length of a torsion class

        :return: degree for torsion classes, 0 for positive rank
        """
        return self.degree if self.is_torsion else 0

    @property
    def slope(self):
        return slope(self)

    def __add__(self, other):
        return ChernPair(self.rank + other.rank, self.degree + other.degree)

    def __mul__(self, n):
        """
        Class of a direct sum of ``n`` copies
        """
        if int(n) < 1:
            raise InvalidClass('multiplicity must be positive, got {}'.format(n))
        return ChernPair(self.rank * n, self.degree * n)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ChernPair) and (self.rank, self.degree) == (other.rank, other.degree)

    def __hash__(self):
        return hash((self.rank, self.degree))

    def __iter__(self):
        return iter((self.rank, self.degree))

    def __repr__(self):
        return 'ChernPair({}, {})'.format(self.rank, self.degree)


class Curve(object):
    """
    Smooth projective curve over the complex numbers, reduced to its genus
    """
    __slots__ = ('genus',)

    def __init__(self, genus):
        genus = int(genus)
        if genus < 0:
            raise InvalidClass('genus must be non-negative, got {}'.format(genus))
        object.__setattr__(self, 'genus', genus)

    def __setattr__(self, key, value):
        raise AttributeError('Curve is immutable')

    def __reduce__(self):
        return Curve, (self.genus,)

    @property
    def canonical_degree(self):
        """
        Degree of the canonical bundle, 2g - 2
        """
        return 2 * self.genus - 2

    def __eq__(self, other):
        return isinstance(other, Curve) and self.genus == other.genus

    def __hash__(self):
        return hash(('curve', self.genus))

    def __repr__(self):
        return 'Curve(genus={})'.format(self.genus)


def slope(c):
    """
    Slope of a class

    :param c: ChernPair
    :return: Slope equal to degree / rank, or INFINITY for torsion classes
    """
    if c.rank == 0:
        if c.degree == 0:
            raise ZeroSheaf('slope of the zero class is undefined')
        return INFINITY
    return Slope(Fraction(c.degree, c.rank))


def euler_pairing(e, f, curve):
    """
    Euler pairing chi(E, F) = dim Hom(E, F) - dim Ext^1(E, F), computed by Riemann-Roch

    For two positive rank classes it is rk(E) rk(F) (1 - g - mu(E) + mu(F)); torsion classes are handled by
    additivity: chi(bundle, torsion) = rank * length, chi(torsion, bundle) = -rank * length, chi(torsion, torsion) = 0

    :param e: ChernPair of the first argument
    :param f: ChernPair of the second argument
    :param curve: Curve
    :return: integer
    """
    if e.is_torsion and f.is_torsion:
        return 0
    if f.is_torsion:
        return e.rank * f.length
    if e.is_torsion:
        return -f.rank * e.length
    value = e.rank * f.rank * (1 - curve.genus - slope(e).value + slope(f).value)
    # rk(E) rk(F) (mu(F) - mu(E)) = rk(E) deg(F) - rk(F) deg(E), so the product is integral
    assert value.denominator == 1, 'non-integral Euler pairing {}'.format(value)
    return int(value)


def serre_twist(e, curve):
    """
    Class of E tensored with the canonical bundle, torsion classes are unchanged

    :param e: ChernPair
    :param curve: Curve
    :return: ChernPair with degree increased by rank * (2g - 2)
    """
    if e.is_torsion:
        return e
    return ChernPair(e.rank, e.degree + e.rank * curve.canonical_degree)


def hom_nonzero_by_riemann_roch(e, f, curve):
    """
    A positive Euler pairing forces a non-zero morphism, since dim Hom >= chi

    :return: True when Hom(E, F) is guaranteed non-zero, False when this criterion says nothing
    """
    return euler_pairing(e, f, curve) > 0


def minimal_class(value):
    """
    Smallest positive rank class of a given finite slope

    :param value: rational slope
    :return: ChernPair (r, d) with d / r = value and gcd(r, d) = 1
    """
    value = Fraction(value)
    return ChernPair(value.denominator, value.numerator)
