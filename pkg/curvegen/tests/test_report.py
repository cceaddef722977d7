# -*- coding: utf-8 -*-
import json

from django.test import SimpleTestCase, override_settings

from curvegen.dsl import Query, parse
from curvegen.engine import Assumption
from curvegen.exceptions import NotSemistable, QueryError
from curvegen.report import relevant_assumptions, run
from curvegen.rules import Decision

DE_JONG = 'curve genus 2\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1,id=L)\nassume hom(E.1, L) = 0\nanalyze E'


def first_result(source):
    return run(parse(source)).results[0]['result']


class AnalyzeTests(SimpleTestCase):
    def test_de_jong_object(self):
        result = first_result(DE_JONG)
        self.assertTrue(result['is_generator'])
        verdict = result['classical']
        self.assertEqual((verdict['decision'], verdict['rule_number']), (Decision.NO, 7))
        self.assertEqual(verdict['rule'], 'simple_orthogonal')
        self.assertTrue(verdict['citation'])
        self.assertEqual(verdict['assumptions_used'], [Assumption('E.1', 'L').to_dict()])
        self.assertTrue(result['gentime']['unbounded'])

    def test_genus_one(self):
        result = first_result('curve genus 1\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1)\nanalyze E')
        self.assertEqual((result['classical']['decision'], result['classical']['rule_number']), (Decision.YES, 3))
        self.assertEqual(result['gentime']['value'], 4)

    def test_torsion_plus_line_bundle(self):
        result = first_result('curve genus 2\nobject E = tors(len=1) + bundle(r=1,d=0)\nanalyze E')
        self.assertEqual((result['classical']['decision'], result['classical']['rule_number']), (Decision.YES, 4))
        gentime = result['gentime']
        self.assertEqual(gentime['value'], 97)
        self.assertEqual([s['value'] for s in gentime['derivation']], [1, 49, 97])

    def test_invariants(self):
        result = first_result('curve genus 2\nobject E = bundle(r=1,d=5) + bundle(r=2,d=1)[1]\nanalyze E')
        invariants = result['invariants']
        self.assertEqual((invariants['total_rank'], invariants['total_degree']), (3, 6))
        self.assertEqual(invariants['euler_class'], {'rank': -1, 'degree': 4})
        self.assertEqual((str(invariants['mu_max']), str(invariants['mu_min'])), ('5', '1/2'))
        self.assertFalse(invariants['classification']['semistable'])
        self.assertEqual(list(invariants['sheaves']), ['-1', '0'])
        self.assertEqual(
            [(g['piece'], g['globally_generated']) for g in result['global_generation']],
            [('E.1', True), ('E.2', False)],
        )

    def test_registry_does_not_change_verdicts(self):
        expected = first_result(DE_JONG)['classical']
        with override_settings(CURVEGEN_REGISTRY_ENABLED=False):
            self.assertEqual(first_result(DE_JONG)['classical'], expected)
        self.assertEqual(first_result(DE_JONG)['classical'], expected)


class OtherQueryTests(SimpleTestCase):
    def test_pairing(self):
        result = first_result('curve genus 2\nobject E = bundle(r=1,d=0)\nobject F = bundle(r=1,d=3)\npairing E F')
        self.assertEqual(result['euler_pairing'], 2)
        self.assertEqual(result['euler_pairing_reversed'], -4)
        self.assertEqual(result['serre_dual_pairing'], 2)
        self.assertEqual(result['hom_nonzero'], [['E.1', 'F.1']])

    def test_semiorth_on_projective_line(self):
        result = first_result('curve genus 0\nobject A = bundle(r=1,d=2)\nobject B = bundle(r=1,d=1)\nsemiorth A B')
        self.assertEqual(result['result'], 'possible')
        self.assertIsNone(result['witness'])
        self.assertEqual(result['oracle'], {'ext_dims': {}, 'vanishes': True})
        self.assertEqual(result['euler_pairing'], 0)

    def test_faltings(self):
        result = first_result('curve genus 2\nobject E = bundle(r=2,d=1)\nfaltings E')
        self.assertEqual(str(result['target_slope']), '3/2')
        self.assertEqual(result['minimal_class'], {'rank': 2, 'degree': 3})

    def test_errors_carry_the_query(self):
        with self.assertRaises(QueryError) as cm:
            run(parse(DE_JONG.replace('analyze E', 'faltings E')))
        self.assertEqual(cm.exception.query, Query(Query.FALTINGS, ['E']))
        self.assertIsInstance(cm.exception.error, NotSemistable)
        self.assertIn('faltings E', str(cm.exception))


class RenderTests(SimpleTestCase):
    def test_json_is_deterministic(self):
        first = run(parse(DE_JONG)).to_json()
        self.assertEqual(first, run(parse(DE_JONG)).to_json())
        document = json.loads(first)
        self.assertEqual(document['characteristic'], 0)
        self.assertEqual(document['curve'], {'genus': 2})
        self.assertEqual(document['objects'], {'E': 'bundle(r=1, d=0) + bundle(r=1, d=1, id=L)'})
        self.assertEqual(document['queries'][0]['query'], 'analyze E')

    def test_json_indent(self):
        report = run(parse(DE_JONG))
        self.assertIn('\n  "characteristic": 0', report.to_json(indent=2))
        with override_settings(CURVEGEN_JSON_INDENT=None):
            self.assertNotIn('\n', report.to_json())

    def test_text(self):
        text = run(parse(DE_JONG)).to_text()
        self.assertTrue(text.startswith('curve of genus 2 (characteristic 0)\n'))
        self.assertIn('weak generator: yes', text)
        self.assertIn('classical generator: no, not a split generator', text)
        self.assertIn('rule 7 (simple_orthogonal)', text)
        self.assertIn('assuming hom(E.1, L) = 0', text)

    def test_text_for_bounded_generating_time(self):
        text = run(parse('curve genus 1\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1)\nanalyze E')).to_text()
        self.assertIn('generating time: at most 4', text)


class RelevantAssumptionsTests(SimpleTestCase):
    def test_only_assumptions_about_the_object(self):
        request = parse(
            'curve genus 2\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1,id=L)\nobject F = bundle(r=1,d=1)\n'
            'assume hom(E.1, L) = 0\nassume hom(E.1, F.1) = 0\n'
        )
        self.assertEqual(relevant_assumptions(request.objects['E'], request.assumptions), [Assumption('E.1', 'L')])
        self.assertEqual(relevant_assumptions(request.objects['F'], request.assumptions), [])
