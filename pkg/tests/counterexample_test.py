# -*- coding: utf-8 -*-
"""
/*
 * Licensed to the Apache Software Foundation (ASF) under one or more
 * contributor license agreements.  See the NOTICE file distributed with
 * this work for additional information regarding copyright ownership.
 * The ASF licenses this file to You under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance with
 * the License.  You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
"""

import unittest

from linkage.common.constants import VERDICT_PASS, VERDICT_FAIL, VERDICT_INCONCLUSIVE
from linkage.common.exceptions import CounterexampleError, ParseError
from linkage.common.loggers import init_log
from linkage.connectivity import PathSystem, vertex_connectivity
from linkage.counterexample import Variant, CounterexampleLayout, build_D1, build_D2, build_counterexample, \
    audit_construction, verify_counterexample, verify_both_variants, check_property_one, check_property_two, \
    ConstructionRules, entry_witness
from linkage.digraph import is_tournament, semidegree
from linkage.oracle import find_linkage_exact


class TestCounterexample(unittest.TestCase):
    def setUp(self):
        init_log()
        self.digraph, self.instance, self.layout = build_counterexample(2, 21)

    def test_parameters(self):
        for k, m in ((2, 20), (1, 21), (2, 19)):
            with self.assertRaises(CounterexampleError):
                build_counterexample(k, m)

    def test_layout(self):
        layout = self.layout
        self.assertEqual(67, self.digraph.n)
        self.assertEqual(67, layout.n)
        self.assertEqual(23, len(layout.d1))
        self.assertEqual(2 * 21, len(layout.d2))
        self.assertEqual(18, len(layout.w))
        self.assertEqual(1, len(layout.s))
        self.assertEqual((65, 66), layout.x)
        self.assertEqual(layout.x, self.instance.x)
        self.assertEqual(layout.y, self.instance.y)
        vertices = list(layout.d1) + list(layout.d2) + list(layout.x)
        self.assertEqual(list(range(67)), sorted(vertices))
        self.assertEqual(layout, CounterexampleLayout.from_dict(layout.to_dict()))
        with self.assertRaises(ParseError):
            CounterexampleLayout.from_dict({'k': 2})

    def test_variants(self):
        self.assertEqual(2, Variant.CONSTRUCTION.excluded_index(2, 21))
        self.assertEqual(20, Variant.CLAIM.excluded_index(2, 21))
        claim, _, claim_layout = build_counterexample(2, 21, Variant.CLAIM)
        self.assertNotEqual(self.layout.excluded(), claim_layout.excluded())
        self.assertNotEqual(self.digraph, claim)
        self.assertTrue(audit_construction(claim, claim_layout).ok)

    def test_parts(self):
        d1, l1 = build_D1(2, 21)
        self.assertEqual(23, d1.n)
        self.assertTrue(is_tournament(d1))
        self.assertEqual(21, len(l1.regular_block))
        d2, l2 = build_D2(2, 21)
        self.assertEqual(42, d2.n)
        self.assertTrue(is_tournament(d2))
        self.assertEqual(10, l2.h)

    def test_claims(self):
        self.assertTrue(is_tournament(self.digraph))
        self.assertEqual(10, semidegree(self.digraph)[2])
        self.assertEqual(4, vertex_connectivity(self.digraph, limit=4))

    def test_designated_tuple_is_linked_at_k2(self):
        result = find_linkage_exact(self.digraph, self.instance)
        self.assertIsInstance(result, PathSystem)
        self.assertTrue(result.is_valid(self.instance.x, self.instance.y))

    def test_audit(self):
        audit = audit_construction(self.digraph, self.layout)
        self.assertTrue(audit.ok, audit.to_dict())
        self.assertEqual(67 * 66 // 2, audit.arcs)
        rules = ConstructionRules(self.layout)
        for u, v in self.digraph.arcs()[:200]:
            self.assertEqual(1, len(rules.classify(u, v)))

    def test_tampered_input_is_flagged(self):
        w0, w1 = self.layout.w[0], self.layout.w[1]
        tampered = self.digraph.with_arc_reversed(w0, w1)
        audit = audit_construction(tampered, self.layout)
        self.assertFalse(audit.ok)
        self.assertIn((w1, w0), [(u, v) for u, v, _ in audit.deviations])

    def test_reversed_x1_arc_is_flagged(self):
        x1, x1_prime = self.layout.x[0], self.layout.x_prime[0]
        tampered = self.digraph.with_arc_reversed(x1, x1_prime)
        audit = audit_construction(tampered, self.layout)
        self.assertFalse(audit.ok)
        self.assertEqual([(x1_prime, x1)], [(u, v) for u, v, _ in audit.deviations])
        report = verify_counterexample(tampered, self.instance, 2, 21, budget=0, layout=self.layout)
        self.assertEqual(VERDICT_FAIL, report.check('construction').verdict)
        self.assertEqual(VERDICT_FAIL, report.overall)

    def test_verify(self):
        report = verify_counterexample(self.digraph, self.instance, 2, 21, layout=self.layout)
        self.assertEqual(VERDICT_PASS, report.check('semidegree').verdict)
        self.assertEqual(VERDICT_PASS, report.check('connectivity').verdict)
        self.assertEqual(VERDICT_PASS, report.check('construction').verdict)
        self.assertEqual(VERDICT_FAIL, report.check('no-linkage').verdict)
        self.assertEqual(VERDICT_FAIL, report.overall)
        self.assertTrue(report.linkage.is_valid(self.instance.x, self.instance.y))
        self.assertEqual('construction', report.to_dict()['variant'])

    def test_verify_both_variants(self):
        reports = verify_both_variants(2, 21, budget=10 ** 5)
        self.assertEqual(set(Variant), set(reports))
        for variant, report in reports.items():
            self.assertEqual(variant, report.variant)
            self.assertEqual(variant.value, report.to_dict()['variant'])
            self.assertEqual(VERDICT_PASS, report.check('construction').verdict)
            self.assertEqual(4, len(report.checks))

    def test_verify_without_budget(self):
        report = verify_counterexample(self.digraph, self.instance, 2, 21, budget=0, layout=self.layout)
        self.assertEqual(VERDICT_INCONCLUSIVE, report.check('no-linkage').verdict)
        self.assertEqual(VERDICT_INCONCLUSIVE, report.overall)

    def test_property_one(self):
        result = check_property_one(2, 21)
        self.assertTrue(result.holds, result.detail)

    def test_property_two(self):
        result = check_property_two(2, 21)
        self.assertFalse(result.holds)
        self.assertTrue(result.detail.startswith('(i)'), result.detail)
        d2, layout = build_D2(2, 21)
        self.assertIsNone(entry_witness(d2, layout.blocks[0], layout.p(2, 1), removed=layout.second_half(),
                                        last_only=True))
        result = check_property_two(3, 31)
        self.assertTrue(result.holds, result.detail)

    def test_property_two_detects_a_second_entry(self):
        d2, layout = build_D2(3, 31)
        second = layout.second_half()
        self.assertIsNone(entry_witness(d2, second, layout.p(2, layout.h)))
        tampered = d2.with_arc_reversed(layout.p(2, layout.h + 3), layout.p(1, 5))
        u, v, end = entry_witness(tampered, second, layout.p(2, layout.h))
        self.assertIn(v, second)
        self.assertIn(end, second)
        self.assertTrue(tampered.has_arc(u, v))
        shortcut = d2.with_arc_reversed(layout.p(1, 7), layout.p(1, 5))
        self.assertEqual((layout.p(1, 5), layout.p(1, 7), layout.p(1, 31)),
                         entry_witness(shortcut, layout.blocks[0], layout.p(3, 1), removed=second, last_only=True))


class TestCounterexampleScaling(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_k3(self):
        digraph, instance, layout = build_counterexample(3, 31)
        self.assertEqual(130, digraph.n)
        report = verify_counterexample(digraph, instance, 3, 31, budget=10 ** 8, layout=layout)
        self.assertEqual(15, report.check('semidegree').value)
        self.assertEqual(VERDICT_PASS, report.check('connectivity').verdict)
        self.assertGreaterEqual(report.check('connectivity').value, 6)
        self.assertEqual(VERDICT_PASS, report.check('construction').verdict)
        self.assertEqual(VERDICT_PASS, report.check('no-linkage').verdict)
        self.assertEqual(VERDICT_PASS, report.overall)


if __name__ == '__main__':
    unittest.main()
