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
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from linkage.common.constants import LOGGER_NAME
from linkage.common.exceptions import SetOverlapError, DigraphError
from linkage.digraph import Digraph, is_path

logger = logging.getLogger(LOGGER_NAME)

SOURCE = -1
SINK = -2


@dataclass(frozen=True)
class PathSystem(object):
    """
    一组有向路。endpoint_disjoint为假时只要求内部顶点互不相交
    """
    paths: Tuple[Tuple[int, ...], ...]
    host: Digraph = field(repr=False, compare=False)
    endpoint_disjoint: bool = True

    @classmethod
    def of(cls, host, paths, endpoint_disjoint=True):
        return cls(tuple(tuple(int(v) for v in path) for path in paths), host, endpoint_disjoint)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, item):
        return self.paths[item]

    def vertices(self):
        return set(v for path in self.paths for v in path)

    def origins(self):
        return [path[0] for path in self.paths]

    def terminals(self):
        return [path[-1] for path in self.paths]

    def problems(self, sources=None, targets=None):
        """
        校验路径组，返回发现的问题列表，空列表表示合法
        :param sources: 第 i 条路应当从 sources[i] 出发
        :param targets: 第 i 条路应当到达 targets[i]
        """
        found = []
        seen = {}
        for i, path in enumerate(self.paths):
            if not is_path(self.host, path):
                found.append('path {} is not a directed path: {}'.format(i, list(path)))
            body = path if self.endpoint_disjoint else path[1:-1]
            for v in body:
                if v in seen and seen[v] != i:
                    found.append('paths {} and {} share vertex {}'.format(seen[v], i, v))
                seen.setdefault(v, i)
            if sources is not None and path[0] != sources[i]:
                found.append('path {} starts at {} instead of {}'.format(i, path[0], sources[i]))
            if targets is not None and path[-1] != targets[i]:
                found.append('path {} ends at {} instead of {}'.format(i, path[-1], targets[i]))
        if sources is not None and len(sources) != len(self.paths):
            found.append('expected {} paths, got {}'.format(len(sources), len(self.paths)))
        return found

    def is_valid(self, sources=None, targets=None):
        return not self.problems(sources, targets)

    def to_dict(self):
        return {'paths': [list(path) for path in self.paths], 'endpoint_disjoint': self.endpoint_disjoint}


@dataclass(frozen=True)
class MaxCutWitness(object):
    """
    少于k条不交路时的分离集，删除后不存在X到Y的路
    """
    separator: Tuple[int, ...]
    flow: int
    partial: Optional[PathSystem] = field(default=None, compare=False)

    def to_dict(self):
        return {'separator': list(self.separator), 'flow': self.flow}


class _UnitFlow(object):
    """
    顶点拆分网络上的最大流：v 拆成 in(v)->out(v)，容量为1；
    原图的弧、源点和汇点的边容量不限。只记录有流量的边。
    """

    def __init__(self, digraph, sources, targets, forbidden):
        n = digraph.n
        self.digraph = digraph
        self.sources = sorted(sources)
        self.targets = np.zeros(n, dtype=bool)
        self.targets[list(targets)] = True
        self.allowed = np.ones(n, dtype=bool)
        if forbidden:
            self.allowed[list(forbidden)] = False
        self.vertex_flow = np.zeros(n, dtype=bool)
        self.arc_flow = {}
        self.source_flow = set()
        self.sink_flow = set()
        self.into = {}
        self.out_of = {}
        self.value = 0
        self.reach_in = None
        self.reach_out = None

    def _search(self):
        n = self.digraph.n
        adj = self.digraph.adj
        reach_in = np.zeros(n, dtype=bool)
        reach_out = np.zeros(n, dtype=bool)
        parent = {}
        queue = deque()
        for x in self.sources:
            reach_in[x] = True
            parent[2 * x] = SOURCE
            queue.append(2 * x)
        while queue:
            node = queue.popleft()
            v = node >> 1
            if node & 1 == 0:
                # in(v)
                if not self.vertex_flow[v] and not reach_out[v]:
                    reach_out[v] = True
                    parent[2 * v + 1] = node
                    queue.append(2 * v + 1)
                u = self.into.get(v)
                if u is not None and u >= 0 and not reach_out[u]:
                    reach_out[u] = True
                    parent[2 * u + 1] = node
                    queue.append(2 * u + 1)
                continue
            # out(v)
            if self.targets[v]:
                parent[SINK] = node
                self.reach_in, self.reach_out = reach_in, reach_out
                return parent
            if self.vertex_flow[v] and not reach_in[v]:
                reach_in[v] = True
                parent[2 * v] = node
                queue.append(2 * v)
            fresh = np.flatnonzero(adj[v] & self.allowed & ~reach_in)
            for w in fresh.tolist():
                reach_in[w] = True
                parent[2 * w] = node
                queue.append(2 * w)
        self.reach_in, self.reach_out = reach_in, reach_out
        return None

    def _augment(self, parent):
        node = SINK
        while node != SOURCE:
            prev = parent[node]
            if node == SINK:
                self.sink_flow.add(prev >> 1)
            elif prev == SOURCE:
                self.source_flow.add(node >> 1)
            else:
                a, b = prev >> 1, node >> 1
                if prev & 1 == 0 and node & 1 == 1:
                    if a == b:
                        self.vertex_flow[a] = True
                    else:
                        self._shift(b, a, -1)
                elif prev & 1 == 1 and node & 1 == 0:
                    if a == b:
                        self.vertex_flow[a] = False
                    else:
                        self._shift(a, b, 1)
            node = prev
        self.value += 1
        self.into = {}
        self.out_of = {}
        for (u, v) in self.arc_flow:
            self.into[v] = u
            self.out_of[u] = v
        for x in self.source_flow:
            self.into.setdefault(x, SOURCE)
        for y in self.sink_flow:
            self.out_of.setdefault(y, SINK)

    def _shift(self, u, v, delta):
        value = self.arc_flow.get((u, v), 0) + delta
        if value:
            self.arc_flow[(u, v)] = value
        else:
            self.arc_flow.pop((u, v), None)

    def run(self, limit):
        while self.value < limit:
            parent = self._search()
            if parent is None:
                return False
            self._augment(parent)
        return True

    def decompose(self):
        paths = []
        for x in sorted(self.source_flow):
            path = [x]
            v = x
            while self.out_of.get(v, SINK) != SINK:
                v = self.out_of[v]
                path.append(v)
            paths.append(path)
        return paths

    def separator(self):
        return tuple(np.flatnonzero(self.reach_in & ~self.reach_out).tolist())


def _trim(path, sources, targets):
    last = next(i for i, v in enumerate(path) if v in targets)
    path = path[:last + 1]
    first = max(i for i, v in enumerate(path) if v in sources)
    return path[first:]


def menger_paths(digraph, xs, ys, k, forbidden=()):
    """
    求k条从X到Y、两两顶点不交、避开forbidden的路
    :param digraph:
    :param xs: 起点集合X
    :param ys: 终点集合Y
    :param k: 需要的路数
    :param forbidden: 禁止经过的顶点
    :return: PathSystem 或者 MaxCutWitness
    """
    xs, ys, forbidden = set(xs), set(ys), set(forbidden)
    if k < 1:
        raise DigraphError('menger_paths needs k >= 1, got {}'.format(k))
    if xs & ys or xs & forbidden or ys & forbidden:
        raise SetOverlapError('X, Y and forbidden must be pairwise disjoint')
    for v in xs | ys | forbidden:
        if not 0 <= v < digraph.n:
            raise DigraphError('Vertex {} out of range for n={}'.format(v, digraph.n))
    network = _UnitFlow(digraph, xs, ys, forbidden)
    done = network.run(k)
    paths = [_trim(path, xs, ys) for path in network.decompose()]
    system = PathSystem.of(digraph, paths)
    logger.debug('menger |X|={} |Y|={} k={} flow={}'.format(len(xs), len(ys), k, network.value))
    if done:
        return system
    return MaxCutWitness(network.separator(), network.value, system)


def local_connectivity(digraph, s, t, cap=None):
    """
    s 到 t 的内部不交路的最大条数，要求 s->t 不是弧
    :param cap: 达到该值即停止
    """
    if digraph.has_arc(s, t):
        raise DigraphError('local connectivity needs a non-arc, got {}->{}'.format(s, t))
    if cap is None:
        cap = digraph.n
    outs = set(digraph.out_neighbours(s)) - {t}
    ins = set(digraph.in_neighbours(t)) - {s}
    common = outs & ins
    if len(common) >= cap:
        return cap
    xs, ys = outs - common, ins - common
    if not xs or not ys:
        return len(common)
    network = _UnitFlow(digraph, xs, ys, common | {s, t})
    network.run(cap - len(common))
    return len(common) + network.value


def vertex_connectivity(digraph, limit=None):
    """
    顶点连通度。完全有向图返回 n-1；否则对前 kappa+1 个顶点 i 与其余顶点 j
    计算不相邻方向上的局部连通度并取最小值
    :param limit: 只关心是否达到该值时传入，结果不超过limit
    """
    n = digraph.n
    if n < 2:
        raise DigraphError('vertex connectivity needs n >= 2')
    best = n - 1
    if limit is not None:
        best = min(best, limit)
    adj = digraph.adj
    if bool((adj | np.eye(n, dtype=bool)).all()):
        return best
    i = 0
    while i <= best and i < n:
        for j in range(n):
            if j == i:
                continue
            if not adj[i, j]:
                best = min(best, local_connectivity(digraph, i, j, best))
            if not adj[j, i]:
                best = min(best, local_connectivity(digraph, j, i, best))
            if best == 0:
                return 0
        i += 1
    logger.debug('kappa={} for n={}'.format(best, n))
    return best
