# -*- coding: utf-8 -*-
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from curvegen.exceptions import InvalidPiece, NotLocallyFree, NotSplit
from curvegen.numerics import INFINITY, ChernPair, Curve
from curvegen.objects import (
    FormalObject, FormalSheaf, Kind, SemistablePiece, Splitting, classify, dual, euler_pairing_objects,
    hn_normalize, mu_extremes, serre_functor, shift, tensor, twist,
)
from curvegen.tests.strategies import curves, objects, split_bundle_objects, split_objects


def sheaf(*classes, **kwargs):
    return FormalSheaf([SemistablePiece(c) for c in classes], **kwargs)


def line(degree, **kwargs):
    return SemistablePiece((1, degree), **kwargs)


def classes_of(s):
    return [tuple(p.chern) for p in s.pieces]


class SemistablePieceTests(SimpleTestCase):
    def test_torsion_annotations_rejected(self):
        with self.assertRaises(InvalidPiece):
            SemistablePiece((0, 2), h0=1)
        with self.assertRaises(InvalidPiece):
            SemistablePiece((0, 2), stable=True)

    def test_power_only_on_line_bundles(self):
        with self.assertRaises(InvalidPiece):
            SemistablePiece((2, 2), power=('L', 1))
        self.assertEqual(SemistablePiece((1, 8), power=('L', 1)).power, ('L', 1))

    def test_multiplicity(self):
        piece = SemistablePiece((2, 1), multiplicity=3)
        self.assertEqual(piece.total, ChernPair(6, 3))
        self.assertEqual(piece.slope, Fraction(1, 2))
        with self.assertRaises(InvalidPiece):
            SemistablePiece((2, 1), multiplicity=0)

    def test_simple_pieces(self):
        self.assertTrue(line(3).is_simple)
        self.assertFalse(SemistablePiece((2, 1)).is_simple)
        self.assertTrue(SemistablePiece((2, 1), stable=True).is_simple)

    def test_refs(self):
        self.assertEqual(line(0, ident='L', tag='E.2').refs, {'L', 'E.2'})
        self.assertFalse(line(0, tag='E.1').is_annotated)


class NormalizeTests(SimpleTestCase):
    def test_equal_slopes_merge(self):
        self.assertEqual(classes_of(hn_normalize(sheaf((1, 0), (1, 2), (1, 2)))), [(2, 4), (1, 0)])
        self.assertEqual(classes_of(hn_normalize(sheaf((1, 1), (2, 2)))), [(3, 3)])

    def test_single_torsion_piece(self):
        self.assertEqual(classes_of(hn_normalize(sheaf((0, 3)))), [(0, 3)])

    def test_torsion_first(self):
        normalized = hn_normalize(sheaf((1, 5), (0, 1), (0, 2)))
        self.assertEqual(classes_of(normalized), [(0, 3), (1, 5)])

    def test_section_counts_add_up(self):
        merged = hn_normalize(FormalSheaf([line(2, h0=1), line(2, h0=2)]))
        self.assertEqual(merged.pieces[0].h0, 3)
        unknown = hn_normalize(FormalSheaf([line(2, h0=1), line(2)]))
        self.assertIsNone(unknown.pieces[0].h0)

    def test_copies_of_one_object_keep_their_labels(self):
        merged = hn_normalize(FormalSheaf([
            line(1, ident='L', h0=0, tag='E.1'), line(1, ident='L', h0=0, power=('M', 1), tag='E.2'),
        ]))
        self.assertEqual(merged.pieces, (SemistablePiece((1, 1), multiplicity=2, h0=0, ident='L'),))
        self.assertEqual(merged.total, ChernPair(2, 2))
        self.assertEqual(hn_normalize(merged), merged)

    def test_stable_copies_stay_stable(self):
        piece = SemistablePiece((2, 1), stable=True, ident='V')
        merged = hn_normalize(FormalSheaf([piece, piece]))
        self.assertEqual(merged.pieces[0], SemistablePiece((2, 1), multiplicity=2, stable=True, ident='V'))
        self.assertTrue(merged.pieces[0].is_simple)

    def test_different_labels_are_dropped(self):
        merged = hn_normalize(FormalSheaf([line(1, ident='L'), line(1, ident='M')]))
        self.assertEqual(merged.pieces[0], SemistablePiece((2, 2)))

    def test_splitting_kept(self):
        self.assertEqual(hn_normalize(sheaf((1, 0), (1, 3), splitting=Splitting.HN_ONLY)).splitting, Splitting.HN_ONLY)

    def test_mu_extremes(self):
        self.assertEqual(mu_extremes(sheaf((2, 4), (1, 0))), (2, 0))
        self.assertEqual(mu_extremes(sheaf((0, 1), (1, 0))), (INFINITY, 0))
        self.assertEqual(mu_extremes(sheaf((3, 3))), (1, 1))

    @given(st.lists(st.builds(SemistablePiece, st.builds(ChernPair, st.integers(0, 4), st.integers(1, 9))),
                    min_size=1, max_size=6))
    def test_idempotent_and_total_preserving(self, pieces):
        s = FormalSheaf(pieces)
        once = hn_normalize(s)
        self.assertEqual(hn_normalize(once), once)
        self.assertEqual(once.total, s.total)
        slopes = once.slopes
        self.assertTrue(all(a > b for a, b in zip(slopes, slopes[1:])))

    @given(st.lists(st.builds(SemistablePiece, st.builds(ChernPair, st.integers(1, 4), st.integers(-9, 9))),
                    min_size=1, max_size=6))
    def test_total_slope_between_extremes(self, pieces):
        s = FormalSheaf(pieces)
        mu_max, mu_min = mu_extremes(s)
        self.assertTrue(mu_min <= s.total.slope <= mu_max)


class ClassifyTests(SimpleTestCase):
    def test_de_jong_object(self):
        obj = FormalObject([(0, line(0)), (0, line(1, h0=0))])
        self.assertEqual(classify(obj).kind, Kind.LOCALLY_FREE)
        self.assertFalse(classify(obj).semistable)

    def test_common_slope_across_degrees(self):
        obj = FormalObject([(0, SemistablePiece((2, 4))), (3, SemistablePiece((3, 6)))])
        self.assertEqual(classify(obj), (Kind.LOCALLY_FREE, 2))

    def test_mixed(self):
        obj = FormalObject([(0, SemistablePiece((0, 2))), (0, SemistablePiece((1, 5)))])
        self.assertEqual(classify(obj).kind, Kind.MIXED)
        self.assertFalse(classify(obj).semistable)

    def test_torsion_is_semistable_of_infinite_slope(self):
        obj = FormalObject([(0, SemistablePiece((0, 2))), (1, SemistablePiece((0, 1)))])
        self.assertEqual(classify(obj), (Kind.TORSION, INFINITY))

    def test_empty_object_rejected(self):
        with self.assertRaises(InvalidPiece):
            FormalObject([])

    def test_genus_zero_forces_split(self):
        obj = FormalObject([(0, line(4)), (0, line(0))], {0: Splitting.HN_ONLY})
        self.assertFalse(obj.is_split)
        self.assertTrue(obj.on_curve(Curve(0)).is_split)
        self.assertFalse(obj.on_curve(Curve(2)).is_split)

    @given(objects, st.integers(-10, 10))
    def test_invariant_under_shift(self, obj, n):
        self.assertEqual(classify(shift(obj, n)), classify(obj))

    @given(objects, st.integers(-20, 20))
    def test_semistability_invariant_under_twist(self, obj, t):
        twisted = classify(twist(obj, t))
        original = classify(obj)
        self.assertEqual(twisted.semistable, original.semistable)
        if original.semistable:
            self.assertEqual(twisted.slope, original.slope + t)


class CalculusTests(SimpleTestCase):
    def test_twist(self):
        twisted = twist(FormalObject([(0, line(0))]), 3)
        self.assertEqual(twisted.pieces[0].chern, ChernPair(1, 3))
        torsion = twist(FormalObject([(0, SemistablePiece((0, 2)))]), 3)
        self.assertEqual(torsion.pieces[0].chern, ChernPair(0, 2))

    def test_twist_erases_annotations(self):
        twisted = twist(FormalObject([(0, line(1, h0=0, ident='L', tag='E.1'))]), 1)
        piece = twisted.pieces[0]
        self.assertEqual((piece.h0, piece.ident, piece.tag), (None, None, None))

    def test_shift_relabels_degrees(self):
        shifted = shift(FormalObject([(0, line(2, tag='E.1'))]), 3)
        self.assertEqual(shifted.summands, ((-3, line(2, tag='E.1')),))

    def test_tensor(self):
        product = tensor(FormalObject([(0, line(-1))]), FormalObject([(0, SemistablePiece((2, 5)))]))
        self.assertEqual(product.pieces[0].chern, ChernPair(2, 3))

    def test_tensor_grading_adds(self):
        product = tensor(FormalObject([(1, line(0))]), FormalObject([(-3, line(2))]))
        self.assertEqual(product.degrees, [-2])

    def test_dual(self):
        self.assertEqual(dual(FormalObject([(0, SemistablePiece((2, 3)))])).pieces[0].chern, ChernPair(2, -3))
        self.assertEqual(dual(FormalObject([(2, line(1))])).degrees, [-2])

    def test_dual_and_tensor_preconditions(self):
        with self.assertRaises(NotLocallyFree):
            dual(FormalObject([(0, SemistablePiece((0, 1)))]))
        hn_only = FormalObject([(0, line(3)), (0, line(0))], {0: Splitting.HN_ONLY})
        with self.assertRaises(NotSplit):
            dual(hn_only)
        with self.assertRaises(NotSplit):
            tensor(hn_only, FormalObject([(0, line(1))]))

    def test_serre_functor(self):
        image = serre_functor(FormalObject([(0, line(0))]), Curve(2))
        self.assertEqual(image.summands, ((-1, line(2)),))

    def test_euler_pairing_with_shift(self):
        o = FormalObject([(0, line(0))])
        self.assertEqual(euler_pairing_objects(o, shift(o, 1), Curve(2)), 1)

    @given(split_bundle_objects)
    def test_dual_is_an_involution(self, obj):
        self.assertEqual(dual(dual(obj)), obj)

    @given(st.builds(ChernPair, st.integers(1, 5), st.integers(-9, 9)),
           st.builds(ChernPair, st.integers(1, 5), st.integers(-9, 9)))
    def test_tensor_adds_slopes(self, a, b):
        product = tensor(FormalObject([(0, SemistablePiece(a))]), FormalObject([(0, SemistablePiece(b))]))
        self.assertEqual(product.pieces[0].slope, a.slope + b.slope)

    @given(split_objects, split_objects, curves)
    def test_serre_duality_for_objects(self, e, f, curve):
        self.assertEqual(euler_pairing_objects(e, f, curve), euler_pairing_objects(f, serre_functor(e, curve), curve))
