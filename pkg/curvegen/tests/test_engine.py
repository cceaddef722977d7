# -*- coding: utf-8 -*-
from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, strategies as st

from curvegen.conf import settings
from curvegen.engine import (
    Assumption, HomVanishing, Witness, classical_status, faltings_orthogonal_class, get_rules, hom_vanishes,
    is_generator, semiorthogonality_check,
)
from curvegen.exceptions import NotSemistable, UnknownAssumptionTarget
from curvegen.numerics import INFINITY, ChernPair, Curve
from curvegen.objects import FormalObject, SemistablePiece, Splitting, shift, twist
from curvegen.rules import Decision
from curvegen.tests.strategies import objects, split_objects


def line(degree, **kwargs):
    return SemistablePiece((1, degree), **kwargs)


def single(rank, degree):
    return FormalObject([(0, SemistablePiece((rank, degree)))])


def de_jong():
    return FormalObject([(0, line(0, tag='E.1')), (0, line(1, h0=0, ident='L', tag='E.2'))])


class GeneratorTests(SimpleTestCase):
    def test_semistable_is_not_a_generator(self):
        for genus in range(4):
            self.assertFalse(is_generator(single(2, 1), Curve(genus)))

    def test_unstable_objects_generate(self):
        self.assertTrue(is_generator(de_jong(), Curve(2)))
        torsion_plus_line = FormalObject([(0, SemistablePiece((0, 1))), (0, line(0))])
        self.assertTrue(is_generator(torsion_plus_line, Curve(3)))


class HomVanishesTests(SimpleTestCase):
    def test_slope_obstruction(self):
        result = hom_vanishes(line(1), line(0))
        self.assertTrue(result.vanishes)
        self.assertEqual(result.reason, HomVanishing.SLOPE)

    def test_assumption(self):
        source, target = line(0, tag='E.1'), line(1, h0=0, ident='L', tag='E.2')
        assumption = Assumption('E.1', 'L')
        result = hom_vanishes(source, target, [assumption])
        self.assertEqual(result, HomVanishing(True, HomVanishing.ASSUMPTION, assumption))

    def test_numerical_data_cannot_decide(self):
        self.assertFalse(hom_vanishes(line(0), line(1)).vanishes)

    def test_stable_pieces_of_equal_slope(self):
        self.assertEqual(hom_vanishes(line(2), line(2)).reason, HomVanishing.STABLE)
        self.assertFalse(hom_vanishes(line(2, ident='M'), line(2, ident='M')).vanishes)
        self.assertFalse(hom_vanishes(SemistablePiece((2, 2)), SemistablePiece((2, 2))).vanishes)


class ClassicalStatusTests(SimpleTestCase):
    def assertVerdict(self, verdict, decision, number):
        self.assertEqual((verdict.decision, verdict.number), (decision, number))
        if verdict.is_decided:
            self.assertTrue(verdict.citation)

    def test_de_jong_object_is_not_a_classical_generator(self):
        verdict = classical_status(de_jong(), Curve(2), [Assumption('E.1', 'L')])
        self.assertVerdict(verdict, Decision.NO, 7)
        self.assertEqual(verdict.rule, 'simple_orthogonal')
        self.assertEqual(verdict.assumptions_used, (Assumption('E.1', 'L'),))

    def test_torsion_plus_bundle(self):
        obj = FormalObject([(0, SemistablePiece((0, 1))), (0, line(0))])
        self.assertVerdict(classical_status(obj, Curve(3)), Decision.YES, 4)

    def test_genus_one(self):
        obj = FormalObject([(0, line(0)), (0, line(1))])
        self.assertVerdict(classical_status(obj, Curve(1)), Decision.YES, 3)

    def test_genus_zero(self):
        obj = FormalObject([(0, line(0)), (0, line(1))])
        self.assertVerdict(classical_status(obj, Curve(0)), Decision.YES, 2)

    def test_small_gap_without_assumptions_is_unknown(self):
        obj = FormalObject([(0, line(0)), (0, line(1))])
        verdict = classical_status(obj, Curve(2))
        self.assertVerdict(verdict, Decision.UNKNOWN, 8)
        self.assertTrue(verdict.reason)

    def test_semistable(self):
        self.assertVerdict(classical_status(single(2, 3), Curve(2)), Decision.NO, 1)

    def test_sufficiently_unstable(self):
        obj = FormalObject([(0, line(0)), (0, line(2))])
        verdict = classical_status(obj, Curve(2))
        self.assertVerdict(verdict, Decision.YES, 5)
        self.assertEqual(verdict.rule, 'sufficiently_unstable')

    def test_gap_across_degrees(self):
        obj = FormalObject([(0, line(0)), (2, line(3))])
        self.assertVerdict(classical_status(obj, Curve(2)), Decision.YES, 5)

    def test_wide_harder_narasimhan_gap(self):
        obj = FormalObject([(0, line(4)), (0, line(0))], {0: Splitting.HN_ONLY})
        verdict = classical_status(obj, Curve(2))
        self.assertVerdict(verdict, Decision.YES, 6)
        self.assertEqual(verdict.rule, 'sufficient_instability')
        self.assertEqual(verdict.details['upper_half'], [4])

    def test_narrow_harder_narasimhan_gap_is_unknown(self):
        obj = FormalObject([(0, line(1)), (0, line(0))], {0: Splitting.HN_ONLY})
        self.assertVerdict(classical_status(obj, Curve(2)), Decision.UNKNOWN, 8)

    def test_non_simple_pieces_are_undecided(self):
        obj = FormalObject([(0, SemistablePiece((2, 0))), (0, SemistablePiece((2, 1)))])
        verdict = classical_status(obj, Curve(3), [])
        self.assertVerdict(verdict, Decision.UNKNOWN, 8)

    def test_unknown_assumption_target(self):
        with self.assertRaises(UnknownAssumptionTarget):
            classical_status(de_jong(), Curve(2), [Assumption('E.1', 'M')])

    @given(objects, st.integers(0, 10))
    def test_yes_implies_generator(self, obj, genus):
        curve = Curve(genus)
        if classical_status(obj, curve).decision == Decision.YES:
            self.assertTrue(is_generator(obj, curve))

    @given(objects, st.integers(0, 1))
    def test_complete_at_low_genus(self, obj, genus):
        curve = Curve(genus)
        verdict = classical_status(obj, curve)
        self.assertNotEqual(verdict.decision, Decision.UNKNOWN)
        self.assertEqual(verdict.decision == Decision.YES, is_generator(obj, curve))

    @given(objects, st.integers(0, 10), st.integers(-5, 5), st.integers(-30, 30))
    def test_equivariance(self, obj, genus, n, t):
        curve = Curve(genus)
        moved = twist(shift(obj, n), t)
        self.assertTrue(classical_status(moved, curve).same_as(classical_status(obj, curve)))
        self.assertEqual(is_generator(moved, curve), is_generator(obj, curve))

    @given(split_objects)
    def test_genus_one_rule_is_redundant_on_split_objects(self, obj):
        curve = Curve(1)
        expected = classical_status(obj, curve).decision
        rules = [r for r in settings.CURVEGEN_RULES if r != 'curvegen.rules.GenusOneRule']
        with override_settings(CURVEGEN_RULES=rules):
            self.assertEqual(classical_status(obj, curve).decision, expected)


class CitationTests(SimpleTestCase):
    anchors = {
        'semistable': 'cor:semistables_form_triangulated_subcategory',
        'genus_zero': 'ssec:unstable_classical_generators',
        'genus_one': 'cor:genus_one_generators',
        'torsion_plus_bundle': 'lem:torsion_plus_bundle_generates_everything',
        'sufficiently_unstable': 'prop:sufficiently_unstable_bundles',
        'sufficient_instability': 'cor:sufficient_instability_criterion',
        'simple_orthogonal': 'lem:extensions_do_not_generate_everything',
        'undecided': 'sec:classical_generators',
    }

    def test_rule_citations_start_with_their_anchor(self):
        rules = get_rules()
        self.assertEqual({rule.id for rule in rules}, set(self.anchors))
        for rule in rules:
            self.assertTrue(rule.citation.startswith(self.anchors[rule.id] + ': '), rule.id)

    def test_verdict_carries_the_rule_citation(self):
        verdict = classical_status(de_jong(), Curve(2), [Assumption('E.1', 'L')])
        self.assertTrue(verdict.citation.startswith('lem:extensions_do_not_generate_everything: '))


class SemiorthogonalityTests(SimpleTestCase):
    def test_slope_offset_g_minus_one(self):
        result = semiorthogonality_check(single(1, 0), single(1, 1), Curve(2))
        self.assertTrue(result.possible)
        self.assertIsNone(result.oracle)

    def test_unstable_first_object(self):
        result = semiorthogonality_check(de_jong(), single(1, 1), Curve(2))
        self.assertFalse(result.possible)
        self.assertEqual(result.witness, Witness(Witness.NOT_SEMISTABLE, 'first'))

    def test_wrong_offset(self):
        result = semiorthogonality_check(single(1, 0), single(1, 0), Curve(2))
        self.assertEqual(result.witness.kind, Witness.SLOPE_OFFSET)

    def test_euler_pairing_witness(self):
        torsion = FormalObject([(0, SemistablePiece((0, 1)))])
        result = semiorthogonality_check(torsion, single(1, 0), Curve(2))
        self.assertEqual(result.witness.kind, Witness.EULER_NONZERO)

    def test_genus_zero_oracle(self):
        for a in range(-3, 4):
            result = semiorthogonality_check(single(1, a), single(1, a - 1), Curve(0))
            self.assertTrue(result.possible)
            self.assertEqual(result.oracle, {'ext_dims': {}, 'vanishes': True})
        result = semiorthogonality_check(single(1, 0), single(1, -2), Curve(0))
        self.assertFalse(result.possible)
        self.assertEqual(result.oracle['ext_dims'], {1: 1})


class FaltingsTests(SimpleTestCase):
    def test_line_bundle(self):
        result = faltings_orthogonal_class(single(1, 0), Curve(2))
        self.assertEqual((result.slope, result.chern), (1, ChernPair(1, 1)))

    def test_fractional_slope(self):
        result = faltings_orthogonal_class(single(2, 1), Curve(2))
        self.assertEqual((result.slope, result.chern), (Fraction(3, 2), ChernPair(2, 3)))

    def test_torsion(self):
        result = faltings_orthogonal_class(FormalObject([(0, SemistablePiece((0, 4)))]), Curve(5))
        self.assertEqual(result.slope, INFINITY)
        self.assertIsNone(result.chern)
        self.assertIn('skyscraper', result.description)

    def test_unstable_object(self):
        with self.assertRaises(NotSemistable):
            faltings_orthogonal_class(de_jong(), Curve(2))
