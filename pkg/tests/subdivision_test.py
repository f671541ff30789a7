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

import networkx as nx
import numpy as np

from linkage.common.exceptions import DigraphError, BlowupError
from linkage.common.loggers import init_log
from linkage.digraph import complete_digraph, transitive_tournament, circulant_tournament, random_tournament, \
    blow_up
from linkage.subdivision import Subdivision, PartialSubdivision, Blocked, SubdivisionFound, HallViolation, \
    TTBlowup, SplitParams, degree_window_subset, lowest_spread_subset, grow_partial_subdivision, subdivide_on, \
    find_subdivision, hall_matching, split_to_tt_blowup


class TestSubdivision(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_degree_window(self):
        tt = transitive_tournament(20)
        self.assertEqual((5, 6, 7, 8, 9), degree_window_subset(tt, 5))
        self.assertEqual((5, 6, 7, 8, 9), degree_window_subset(tt, 5, window=4))
        self.assertIsNone(degree_window_subset(tt, 5, window=3))
        self.assertIsNone(degree_window_subset(tt, 30))
        self.assertEqual((0, 1, 2, 3, 4), lowest_spread_subset(tt, 5, range(20)))

    def test_complete_digraph(self):
        digraph = complete_digraph(5)
        result = subdivide_on(digraph, [0, 1, 2, 3, 4], 2)
        self.assertIsInstance(result, Subdivision)
        self.assertTrue(result.is_valid(digraph))
        self.assertEqual(20, len(result.paths))
        self.assertEqual(set(range(5)), result.vertices())
        self.assertEqual((0, 1, 2), result.restrict([2, 0, 1]).branch_set)

    def test_transitive_is_blocked(self):
        tt = transitive_tournament(3)
        result = subdivide_on(tt, [0, 1, 2], 2)
        self.assertIsInstance(result, Blocked)
        self.assertEqual((1, 0), (result.u, result.v))
        self.assertEqual([(0, 1), (0, 2), (1, 2)], sorted(result.partial.paths))
        self.assertTrue(result.partial.is_valid(tt))
        self.assertFalse(Subdivision.from_partial(result.partial).is_valid(tt))

    def test_circulant_paths(self):
        digraph = circulant_tournament(13)
        result = find_subdivision(digraph, range(13), 3, 2)
        self.assertIsInstance(result, Subdivision)
        self.assertTrue(result.is_valid(digraph))
        self.assertEqual((1, 7, 0), result.path(1, 0))
        for path in result.paths.values():
            self.assertLessEqual(len(path) - 1, 3)
        with self.assertRaises(DigraphError):
            find_subdivision(digraph, [0, 1], 3, 2)

    def test_ell_zero(self):
        digraph = circulant_tournament(7)
        partial = grow_partial_subdivision(digraph, [0, 1, 2], 0)
        self.assertEqual([(0, 1), (0, 2), (1, 2)], sorted(partial.paths))
        self.assertFalse(partial.is_complete())

    def test_allowed_region(self):
        digraph = circulant_tournament(13)
        partial = grow_partial_subdivision(digraph, [0, 1, 2], 2, allowed=[3, 4, 5])
        for path in partial.paths.values():
            self.assertTrue(set(path[1:-1]) <= {3, 4, 5})
        self.assertNotIn((1, 0), partial.paths)

    def test_problems(self):
        digraph = complete_digraph(4)
        broken = PartialSubdivision((0, 1), {(0, 1): (0, 2, 3, 1), (1, 0): (1, 2, 0)}, 1)
        problems = broken.problems(digraph)
        self.assertTrue(any('length' in p for p in problems))
        self.assertTrue(any('share' in p for p in problems))


class TestHallMatching(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_simple(self):
        self.assertEqual({0: 1, 1: 0}, hall_matching(2, 2, [(0, 1), (1, 0), (1, 1)]))
        violation = hall_matching(3, 3, [(0, 0), (1, 0), (2, 1)])
        self.assertIsInstance(violation, HallViolation)
        self.assertEqual((0,), violation.neighbours)
        self.assertEqual((0, 1), violation.left)
        with self.assertRaises(DigraphError):
            hall_matching(1, 1, [(0, 1)])

    def test_against_networkx(self):
        rng = np.random.default_rng(5)
        for case in range(100):
            left, right = int(rng.integers(1, 8)), int(rng.integers(1, 8))
            edges = [(i, j) for i in range(left) for j in range(right) if rng.random() < 0.3]
            graph = nx.Graph()
            graph.add_nodes_from(('l', i) for i in range(left))
            graph.add_nodes_from(('r', j) for j in range(right))
            graph.add_edges_from((('l', i), ('r', j)) for i, j in edges)
            size = len(nx.bipartite.hopcroft_karp_matching(graph, top_nodes=[('l', i) for i in range(left)])) // 2
            result = hall_matching(left, right, edges)
            if size == left:
                self.assertIsInstance(result, dict, 'case {}'.format(case))
                self.assertEqual(left, len(set(result.values())))
                for i, j in result.items():
                    self.assertIn((i, j), edges)
            else:
                self.assertIsInstance(result, HallViolation, 'case {}'.format(case))
                neighbours = set(j for i, j in edges if i in result.left)
                self.assertEqual(neighbours, set(result.neighbours))
                self.assertLess(len(result.neighbours), len(result.left))


def _check_blowup(test, digraph, blocks, blowup, splits, params):
    test.assertTrue(blowup.is_valid(digraph), blowup.problems(digraph))
    test.assertEqual(sorted(range(len(blocks))), sorted(blowup.block_map))
    for part, block in zip(blowup.parts, blowup.block_map):
        test.assertTrue(set(part) <= set(blocks[block]))
        test.assertGreaterEqual(len(part), params.part_min)
    for i, j in [(i, j) for i in range(len(blowup.parts)) for j in range(i + 1, len(blowup.parts))]:
        for u in blowup.parts[i]:
            for v in blowup.parts[j]:
                test.assertTrue(digraph.has_arc(u, v))
    test.assertEqual(params.splits_factor * len(blocks) - 1, len(splits))
    for record in splits:
        test.assertEqual(record.size - record.u_size - record.v_size, record.loss, str(record))
        test.assertLessEqual(record.loss, record.bound, str(record))
        test.assertEqual(params.s, len(record.branch_set))


class TestSplitting(unittest.TestCase):
    def setUp(self):
        init_log()
        self.params = SplitParams(s=4, part_min=5)

    def test_params(self):
        with self.assertRaises(DigraphError):
            SplitParams(s=1, part_min=5)

    def test_transitive_fixtures(self):
        for alpha in (1, 2, 3):
            size = 60 * alpha
            digraph = transitive_tournament(size)
            blocks = [list(range(i * 60, (i + 1) * 60)) for i in range(alpha)]
            blowup, splits = split_to_tt_blowup(digraph, blocks, self.params)
            _check_blowup(self, digraph, blocks, blowup, splits, self.params)

    def test_first_split_record(self):
        digraph = transitive_tournament(200)
        _, splits = split_to_tt_blowup(digraph, [list(range(200))], self.params)
        first = splits[0]
        self.assertEqual((0, 200), (first.h, first.size))
        self.assertEqual((45, 46, 47, 48), first.branch_set)
        self.assertEqual((46, 45), first.blocked)
        self.assertEqual((151, 45), (first.u_size, first.v_size))
        self.assertEqual(4, first.loss)
        self.assertEqual(8, first.bound)

    def test_complete_block_gives_subdivision(self):
        digraph = blow_up(transitive_tournament(2), [complete_digraph(30), complete_digraph(30)])
        blocks = [list(range(30)), list(range(30, 60))]
        result = split_to_tt_blowup(digraph, blocks, self.params)
        self.assertIsInstance(result, SubdivisionFound)
        self.assertEqual(0, result.block)
        self.assertTrue(result.subdivision.is_valid(digraph))
        self.assertTrue(set(result.subdivision.branch_set) <= set(blocks[result.block]))

    def test_random_parts(self):
        for seed in range(5):
            parts = [random_tournament(50, seed=seed * 3 + i) for i in range(3)]
            digraph = blow_up(transitive_tournament(3), parts)
            blocks = [list(range(i * 50, (i + 1) * 50)) for i in range(3)]
            try:
                result = split_to_tt_blowup(digraph, blocks, self.params)
            except BlowupError as e:
                self.assertNotIn(e.stage, ('split-order', 'domination'))
                continue
            if isinstance(result, SubdivisionFound):
                self.assertTrue(result.subdivision.is_valid(digraph))
            else:
                _check_blowup(self, digraph, blocks, result[0], result[1], self.params)

    def test_overlapping_blocks(self):
        with self.assertRaises(DigraphError):
            split_to_tt_blowup(transitive_tournament(10), [[0, 1, 2], [2, 3]], self.params)

    def test_blowup_problems(self):
        tt = transitive_tournament(4)
        self.assertTrue(TTBlowup(((0, 1), (2, 3)), (1, 0)).is_valid(tt))
        self.assertFalse(TTBlowup(((2, 3), (0, 1)), (0, 1)).is_valid(tt))
        self.assertEqual((0, 1), TTBlowup(((0, 1), (2, 3)), (1, 0)).part_of_block(1))


if __name__ == '__main__':
    unittest.main()
