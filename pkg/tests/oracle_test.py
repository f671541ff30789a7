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

import threading
import unittest

import networkx as nx
import numpy as np

from linkage.common.exceptions import TerminalError, DigraphError
from linkage.common.loggers import init_log
from linkage.connectivity import PathSystem
from linkage.digraph import Digraph, complete_digraph, transitive_tournament, circulant_tournament, \
    random_semicomplete, new_digraph
from linkage.oracle import LinkageInstance, Infeasible, BudgetExhausted, CounterTuple, SearchBudget, \
    find_linkage_exact, is_k_linked, shortest_path, reachable


def to_networkx(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(digraph.n))
    graph.add_edges_from(digraph.arcs())
    return graph


def brute_force_two(digraph, instance):
    """
    枚举第一对的全部简单路，再判断第二对在剩余图中是否可达
    """
    graph = to_networkx(digraph)
    (x1, x2), (y1, y2) = instance.x, instance.y
    first = graph.subgraph(v for v in graph if v not in (x2, y2))
    for path in nx.all_simple_paths(first, x1, y1):
        rest = graph.subgraph(v for v in graph if v not in path)
        if nx.has_path(rest, x2, y2):
            return True
    return False


class TestOracle(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_instance_validation(self):
        with self.assertRaises(TerminalError):
            LinkageInstance.of([0, 1], [1, 2]).validate(4)
        with self.assertRaises(TerminalError):
            LinkageInstance.of([0], [5]).validate(4)
        with self.assertRaises(TerminalError):
            LinkageInstance.of([0, 1], [2]).validate(4)

    def test_transitive_is_not_linked(self):
        tt = transitive_tournament(3)
        self.assertIsInstance(find_linkage_exact(tt, LinkageInstance.of([2], [0])), Infeasible)
        result = is_k_linked(tt, 1)
        self.assertIsInstance(result, CounterTuple)
        self.assertEqual((1,), result.x)
        self.assertEqual((0,), result.y)

    def test_complete_is_linked(self):
        self.assertIs(True, is_k_linked(complete_digraph(4), 2))
        with self.assertRaises(DigraphError):
            is_k_linked(complete_digraph(3), 2)

    def test_found_linkage_is_valid(self):
        digraph = circulant_tournament(9)
        instance = LinkageInstance.of([0, 1], [5, 6])
        result = find_linkage_exact(digraph, instance)
        self.assertIsInstance(result, PathSystem)
        self.assertTrue(result.is_valid(instance.x, instance.y))

    def test_budget(self):
        digraph = circulant_tournament(9)
        instance = LinkageInstance.of([0, 1], [5, 6])
        self.assertIsInstance(find_linkage_exact(digraph, instance, 0), BudgetExhausted)
        budget = SearchBudget(10 ** 6)
        budget.cancel()
        result = find_linkage_exact(digraph, instance, budget)
        self.assertIsInstance(result, BudgetExhausted)
        self.assertTrue(result.cancelled)

    def test_random_against_brute_force(self):
        rng = np.random.default_rng(7)
        for seed in range(40):
            n = int(rng.integers(5, 9))
            digraph = random_semicomplete(n, seed=seed, digon_p=0.1)
            terminals = rng.permutation(n)[:4].tolist()
            instance = LinkageInstance.of(terminals[:2], terminals[2:])
            expected = brute_force_two(digraph, instance)
            result = find_linkage_exact(digraph, instance)
            if expected:
                self.assertIsInstance(result, PathSystem, 'seed {}'.format(seed))
                self.assertTrue(result.is_valid(instance.x, instance.y))
            else:
                self.assertIsInstance(result, Infeasible, 'seed {}'.format(seed))

    def test_sparse_against_brute_force(self):
        rng = np.random.default_rng(11)
        for case in range(40):
            n = 7
            matrix = rng.random((n, n)) < 0.35
            np.fill_diagonal(matrix, False)
            digraph = Digraph(matrix)
            instance = LinkageInstance.of([0, 1], [2, 3])
            expected = brute_force_two(digraph, instance)
            self.assertEqual(expected, isinstance(find_linkage_exact(digraph, instance), PathSystem),
                             'case {}'.format(case))

    def test_three_pairs(self):
        digraph = complete_digraph(6)
        instance = LinkageInstance.of([0, 1, 2], [3, 4, 5])
        result = find_linkage_exact(digraph, instance)
        self.assertEqual([(0, 3), (1, 4), (2, 5)], list(result))

    def test_concurrent_searches(self):
        digraph = circulant_tournament(11)
        results = {}

        def run(index, xs, ys):
            results[index] = find_linkage_exact(digraph, LinkageInstance.of(xs, ys))

        threads = [threading.Thread(target=run, args=(i, [i, i + 1], [i + 5, i + 6])) for i in range(4)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        for i in range(4):
            self.assertTrue(results[i].is_valid((i, i + 1), (i + 5, i + 6)))

    def test_helpers(self):
        tt = transitive_tournament(4)
        region = np.ones(4, dtype=bool)
        self.assertEqual([0, 3], shortest_path(tt.adj, 0, 3, region))
        self.assertIsNone(shortest_path(tt.adj, 3, 0, region))
        path = new_digraph(4, [(0, 1), (1, 2), (2, 3)])
        region[2] = False
        self.assertFalse(reachable(path.adj, 0, region)[3])
        self.assertEqual([0, 1], np.flatnonzero(reachable(path.adj, 0, region)).tolist())


if __name__ == '__main__':
    unittest.main()
