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

import itertools
import unittest

import numpy as np

from linkage.common.exceptions import RerouteError
from linkage.common.loggers import init_log
from linkage.connectivity import PathSystem
from linkage.digraph import complete_digraph, random_semicomplete
from linkage.reroute import RerouteVariant, free_subdivision
from linkage.subdivision import Subdivision, find_subdivision, subdivide_on


def build_fixture(seed, s, ell, moreover):
    """
    稠密的随机半完全有向图上的细分，加上穿过细分的路组
    :return: (digraph, subdivision, q, origins, targets) 或者 None
    """
    n = 24
    digraph = random_semicomplete(n, seed=seed, digon_p=0.6)
    subdivision = find_subdivision(digraph, range(n), s, ell)
    if not isinstance(subdivision, Subdivision):
        return None
    rng = np.random.default_rng(seed)
    inside = sorted(subdivision.vertices())
    outside = [v for v in range(n) if v not in set(inside)]
    count = int(rng.integers(1, 5))
    order = rng.permutation(outside).tolist()
    targets = order[:count]
    if moreover:
        origins = rng.permutation(list(subdivision.branch_set)).tolist()[:count]
    else:
        origins = order[count:2 * count]
    if len(origins) < count:
        return None
    adj = digraph.adj
    used = set(origins) | set(targets)
    paths = []
    for o, y in zip(origins, targets):
        middle = [v for v in rng.permutation(inside).tolist() if v not in used and adj[o, v] and adj[v, y]]
        if middle:
            paths.append((o, middle[0], y))
            used.add(middle[0])
        elif adj[o, y]:
            paths.append((o, y))
        else:
            return None
    return digraph, subdivision, PathSystem.of(digraph, paths), origins, targets


class TestReroute(unittest.TestCase):
    def setUp(self):
        init_log()

    def assert_freed(self, subdivision, result, origins, targets):
        system = result.q_hat
        self.assertTrue(system.is_valid(None, targets), system.problems(None, targets))
        used = system.vertices()
        branch = set(subdivision.branch_set)
        self.assertTrue(set(result.s_prime) <= branch)
        if result.variant is RerouteVariant.STANDARD:
            self.assertEqual(sorted(origins), sorted(system.origins()))
            for u, v in itertools.permutations(result.s_prime, 2):
                self.assertFalse(set(subdivision.path(u, v)) & used, (u, v))
        else:
            starts = set(system.origins())
            self.assertTrue(starts <= branch)
            for u in branch - starts:
                for v in branch - {u}:
                    met = set(subdivision.path(u, v)) & used
                    self.assertTrue(met <= ({v} & starts), (u, v, met))

    def test_untouched_paths(self):
        digraph = complete_digraph(8)
        subdivision = subdivide_on(digraph, [0, 1, 2], 0)
        q = PathSystem.of(digraph, [(3, 0, 5), (4, 1, 6)])
        result = free_subdivision(digraph, subdivision, q, [3, 4], [5, 6], 1)
        self.assertEqual((2,), result.s_prime)
        self.assertEqual(q.paths, result.q_hat.paths)
        self.assertEqual({0: 'P2', 1: 'P2'}, result.trace.rules)
        self.assert_freed(subdivision, result, [3, 4], [5, 6])

    def test_moreover_keeps_branch_origins(self):
        digraph = complete_digraph(8)
        subdivision = subdivide_on(digraph, [0, 1, 2], 0)
        q = PathSystem.of(digraph, [(0, 5)])
        result = free_subdivision(digraph, subdivision, q, [0], [5], 1, RerouteVariant.MOREOVER)
        self.assertEqual((1, 2), result.s_prime)
        self.assertEqual((0,), result.origins)
        self.assert_freed(subdivision, result, [0], [5])

    def test_preconditions(self):
        digraph = complete_digraph(8)
        subdivision = subdivide_on(digraph, [0, 1, 2], 0)
        with self.assertRaises(RerouteError) as context:
            free_subdivision(digraph, subdivision, PathSystem.of(digraph, [(3, 0)]), [3], [0], 1)
        self.assertEqual('precondition', context.exception.stage)
        with self.assertRaises(RerouteError) as context:
            free_subdivision(digraph, subdivision, PathSystem.of(digraph, [(3, 5)]), [3], [5], 1,
                             RerouteVariant.MOREOVER)
        self.assertEqual('precondition', context.exception.stage)
        with self.assertRaises(RerouteError) as context:
            free_subdivision(digraph, subdivision, PathSystem.of(digraph, [(3, 0, 5)]), [3], [5], 3)
        self.assertEqual('freed', context.exception.stage)

    def test_random_fixtures(self):
        built = 0
        for seed in range(600):
            if built >= 60:
                break
            s = 3 + seed % 2
            ell = 2 if seed % 3 else 0
            moreover = seed % 4 == 0
            fixture = build_fixture(seed, s, ell, moreover)
            if fixture is None:
                continue
            built += 1
            digraph, subdivision, q, origins, targets = fixture
            variant = RerouteVariant.MOREOVER if moreover else RerouteVariant.STANDARD
            try:
                result = free_subdivision(digraph, subdivision, q, origins, targets, 0, variant)
            except RerouteError as e:
                self.fail('seed {}: {}'.format(seed, e))
            self.assert_freed(subdivision, result, origins, targets)
            self.assertEqual(set(range(len(q))), set(result.trace.rules))
        self.assertEqual(60, built)

    def test_trace(self):
        digraph = complete_digraph(8)
        subdivision = subdivide_on(digraph, [0, 1, 2], 0)
        q = PathSystem.of(digraph, [(3, 0, 5)])
        result = free_subdivision(digraph, subdivision, q, [3], [5], 1)
        value = result.to_dict()
        self.assertEqual('standard', value['variant'])
        self.assertTrue(list(result.trace.lines()))


if __name__ == '__main__':
    unittest.main()
