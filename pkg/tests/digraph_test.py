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

import logging
import unittest

import networkx as nx
import numpy as np

from linkage.common.exceptions import DigraphError, NotSemicompleteError
from linkage.common.loggers import init_log
from linkage.digraph import Digraph, new_digraph, complete_digraph, circulant_tournament, transitive_tournament, \
    backward_path_tournament, random_tournament, random_semicomplete, blow_up, part_offsets, hamiltonian_path, \
    is_path, is_semicomplete, is_tournament, semidegree

logger = logging.getLogger('python-linkage')


def to_networkx(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(digraph.n))
    graph.add_edges_from(digraph.arcs())
    return graph


class TestDigraph(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_construction_errors(self):
        with self.assertRaises(DigraphError):
            new_digraph(3, [(0, 0)])
        with self.assertRaises(DigraphError):
            new_digraph(3, [(0, 3)])
        with self.assertRaises(DigraphError):
            Digraph(np.zeros((2, 3), dtype=bool))

    def test_read_only(self):
        digraph = circulant_tournament(5)
        with self.assertRaises(ValueError):
            digraph.adj[0, 1] = False

    def test_circulant(self):
        digraph = circulant_tournament(9)
        self.assertEqual(36, digraph.arc_count())
        self.assertTrue(is_tournament(digraph))
        self.assertEqual((4, 4, 4), semidegree(digraph))
        self.assertEqual((1, 2, 3, 4), digraph.out_neighbours(0))
        self.assertEqual((5, 6, 7, 8), digraph.in_neighbours(0))
        with self.assertRaises(DigraphError):
            circulant_tournament(8)

    def test_transitive_and_backward(self):
        tt = transitive_tournament(5)
        self.assertEqual(10, tt.arc_count())
        self.assertTrue(is_tournament(tt))
        self.assertEqual([0, 1, 2, 3, 4], hamiltonian_path(tt))
        self.assertTrue(nx.is_directed_acyclic_graph(to_networkx(tt)))

        backward = backward_path_tournament(5)
        self.assertTrue(is_tournament(backward))
        self.assertTrue(is_path(backward, [0, 1, 2, 3, 4]))
        for i in range(5):
            for j in range(i + 2, 5):
                self.assertTrue(backward.has_arc(j, i))

    def test_complete(self):
        digraph = complete_digraph(4)
        self.assertEqual(12, digraph.arc_count())
        self.assertTrue(is_semicomplete(digraph))
        self.assertFalse(is_tournament(digraph))
        self.assertEqual((3, 3, 3), semidegree(digraph))

    def test_random_generators(self):
        self.assertEqual(random_tournament(12, seed=4), random_tournament(12, seed=4))
        self.assertTrue(is_tournament(random_tournament(12, seed=4)))
        for seed in range(10):
            digraph = random_semicomplete(15, seed=seed)
            self.assertTrue(is_semicomplete(digraph))
        self.assertTrue(is_tournament(random_semicomplete(15, seed=1, digon_p=0.0)))
        self.assertEqual(random_semicomplete(10, seed=2), random_semicomplete(10, seed=2))

    def test_hamiltonian_path(self):
        for seed in range(20):
            digraph = random_semicomplete(12, seed=seed)
            path = hamiltonian_path(digraph)
            self.assertEqual(12, len(path))
            self.assertTrue(nx.is_simple_path(to_networkx(digraph), path))
        with self.assertRaises(NotSemicompleteError):
            hamiltonian_path(new_digraph(3, [(0, 1)]))

    def test_induced_and_relabel(self):
        tt = transitive_tournament(4)
        reverse = tt.relabel([3, 2, 1, 0])
        self.assertTrue(reverse.has_arc(1, 0))
        self.assertFalse(reverse.has_arc(0, 1))
        sub = circulant_tournament(7).induced([0, 2, 4])
        self.assertEqual(3, sub.n)
        self.assertTrue(sub.has_arc(0, 1))
        with self.assertRaises(DigraphError):
            tt.relabel([0, 0, 1, 2])

    def test_arc_reversal(self):
        tt = transitive_tournament(3)
        flipped = tt.with_arc_reversed(0, 2)
        self.assertTrue(flipped.has_arc(2, 0))
        self.assertFalse(flipped.has_arc(0, 2))
        self.assertNotEqual(tt, flipped)
        with self.assertRaises(DigraphError):
            tt.with_arc_reversed(2, 0)

    def test_blow_up(self):
        parts = [complete_digraph(2), transitive_tournament(3)]
        digraph = blow_up(transitive_tournament(2), parts)
        self.assertEqual([0, 2, 5], part_offsets(parts))
        self.assertEqual(5, digraph.n)
        self.assertEqual(2 + 3 + 6, digraph.arc_count())
        self.assertTrue(digraph.dominates([0, 1], [2, 3, 4]))
        self.assertFalse(digraph.dominates([2], [0]))

    def test_degree_within(self):
        digraph = circulant_tournament(7)
        self.assertEqual(2, digraph.out_degree(0, within=[1, 2, 5]))
        self.assertEqual(1, digraph.in_degree(0, within=[1, 2, 5]))


if __name__ == '__main__':
    unittest.main()
