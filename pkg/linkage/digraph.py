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
import numpy as np

from linkage.common.constants import LOGGER_NAME
from linkage.common.exceptions import DigraphError, NotSemicompleteError

logger = logging.getLogger(LOGGER_NAME)


class Digraph(object):
    """
    稠密表示的有向图，顶点为 0..n-1，允许双向弧，不允许自环。
    构造之后只读，可以在线程之间共享。
    """

    def __init__(self, adj):
        """
        :param adj: n*n 的布尔矩阵，adj[u, v] 为真表示存在弧 u->v
        """
        matrix = np.array(adj, dtype=bool, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DigraphError('Adjacency matrix must be square, got shape {}'.format(matrix.shape))
        if matrix.diagonal().any():
            loop = int(np.flatnonzero(matrix.diagonal())[0])
            raise DigraphError('Self-loop at vertex {}'.format(loop))
        matrix.setflags(write=False)
        self.__adj = matrix
        self.__n = matrix.shape[0]
        self.__out = [None] * self.__n
        self.__in = [None] * self.__n

    @property
    def n(self):
        return self.__n

    @property
    def adj(self):
        """
        只读的邻接矩阵
        """
        return self.__adj

    def vertices(self):
        return range(self.__n)

    def has_arc(self, u, v):
        return bool(self.__adj[u, v])

    def arcs(self):
        """
        :return: 按 (u, v) 字典序排列的全部弧
        """
        rows, cols = np.nonzero(self.__adj)
        return list(zip(rows.tolist(), cols.tolist()))

    def arc_count(self):
        return int(self.__adj.sum())

    def out_neighbours(self, v):
        """
        :return: 按编号升序的出邻居元组
        """
        cached = self.__out[v]
        if cached is None:
            cached = tuple(np.flatnonzero(self.__adj[v]).tolist())
            self.__out[v] = cached
        return cached

    def in_neighbours(self, v):
        cached = self.__in[v]
        if cached is None:
            cached = tuple(np.flatnonzero(self.__adj[:, v]).tolist())
            self.__in[v] = cached
        return cached

    def out_degree(self, v, within=None):
        """
        :param within: 只统计落在该集合中的出邻居
        """
        if within is None:
            return len(self.out_neighbours(v))
        return int(self.__adj[v, _index(within)].sum())

    def in_degree(self, v, within=None):
        if within is None:
            return len(self.in_neighbours(v))
        return int(self.__adj[_index(within), v].sum())

    def out_degrees(self):
        return self.__adj.sum(axis=1)

    def in_degrees(self):
        return self.__adj.sum(axis=0)

    def dominates(self, left, right):
        """
        left 中每个点到 right 中每个点都有弧
        """
        left, right = _index(left), _index(right)
        if len(left) == 0 or len(right) == 0:
            return True
        return bool(self.__adj[np.ix_(left, right)].all())

    def induced(self, vertices):
        """
        导出子图，新编号 i 对应 vertices[i]
        :return: Digraph
        """
        order = _index(vertices)
        return Digraph(self.__adj[np.ix_(order, order)])

    def relabel(self, order):
        """
        重新编号，新顶点 i 是原来的顶点 order[i]
        """
        order = _index(order)
        if sorted(order.tolist()) != list(range(self.__n)):
            raise DigraphError('Relabel order is not a permutation of 0..{}'.format(self.__n - 1))
        return self.induced(order)

    def with_arc_reversed(self, u, v):
        """
        把弧 u->v 换成 v->u，返回新图
        """
        if not self.has_arc(u, v):
            raise DigraphError('No arc {}->{} to reverse'.format(u, v))
        matrix = self.__adj.copy()
        matrix[u, v] = False
        matrix[v, u] = True
        return Digraph(matrix)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.__n == other.n and bool(np.array_equal(self.__adj, other.adj))

    __hash__ = None

    def __repr__(self):
        return 'Digraph(n={}, arcs={})'.format(self.__n, self.arc_count())


def _index(vertices):
    return np.fromiter(vertices, dtype=np.intp) if not isinstance(vertices, np.ndarray) else vertices.astype(np.intp)


def new_digraph(n, arcs):
    """
    根据弧列表构造有向图
    :param n: 顶点数
    :param arcs: (u, v) 列表
    :return: Digraph
    """
    if n < 0:
        raise DigraphError('Negative vertex count {}'.format(n))
    matrix = np.zeros((n, n), dtype=bool)
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError('Arc ({}, {}) out of range for n={}'.format(u, v, n))
        if u == v:
            raise DigraphError('Self-loop at vertex {}'.format(u))
        matrix[u, v] = True
    return Digraph(matrix)


def is_semicomplete(digraph):
    """
    每一对顶点之间至少有一条弧
    """
    if digraph.n < 2:
        return True
    adj = digraph.adj
    covered = adj | adj.T | np.eye(digraph.n, dtype=bool)
    return bool(covered.all())


def is_tournament(digraph):
    """
    每一对顶点之间恰好有一条弧
    """
    adj = digraph.adj
    return is_semicomplete(digraph) and not bool((adj & adj.T).any())


def require_semicomplete(digraph, what='operation'):
    if not is_semicomplete(digraph):
        raise NotSemicompleteError('{} requires a semicomplete digraph'.format(what))


def complete_digraph(n):
    """
    完全有向图 K_n，每一对顶点之间两个方向都有弧
    """
    matrix = np.ones((n, n), dtype=bool)
    np.fill_diagonal(matrix, False)
    return Digraph(matrix)


def circulant_tournament(n):
    """
    旋转构造的正则竞赛图：i->j 当且仅当 (j-i) mod n 属于 {1..(n-1)/2}
    """
    if n < 3 or n % 2 == 0:
        raise DigraphError('Circulant tournament needs odd n >= 3, got {}'.format(n))
    diff = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return Digraph((diff >= 1) & (diff <= (n - 1) // 2))


def transitive_tournament(n):
    """
    传递竞赛图 TT_n：i->j 当且仅当 i<j
    """
    if n < 1:
        raise DigraphError('Transitive tournament needs n >= 1, got {}'.format(n))
    return Digraph(np.triu(np.ones((n, n), dtype=bool), k=1))


def backward_path_tournament(m):
    """
    后向路竞赛图：i->i+1，并且 j->i 对所有 j>=i+2
    """
    if m < 1:
        raise DigraphError('Backward path tournament needs m >= 1, got {}'.format(m))
    matrix = np.tril(np.ones((m, m), dtype=bool), k=-2)
    idx = np.arange(m - 1)
    matrix[idx, idx + 1] = True
    return Digraph(matrix)


def random_tournament(n, seed=0):
    """
    随机竞赛图，给定种子时结果确定
    """
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < 0.5, k=1)
    lower = np.triu(~upper, k=1).T
    return Digraph(upper | lower)


def random_semicomplete(n, seed=0, digon_p=0.2):
    """
    随机半完全有向图
    :param digon_p: 每一对顶点成为双向弧的概率
    """
    rng = np.random.default_rng(seed)
    draw = rng.random((n, n))
    forward = rng.random((n, n)) < 0.5
    digon = np.triu(draw < digon_p, k=1)
    upper = np.triu(forward, k=1) | digon
    lower = (np.triu(~forward, k=1) | digon).T
    return Digraph(upper | lower)


def blow_up(template, parts):
    """
    膨胀：第 i 个分块的顶点依次编号，template 中的弧 i->j 变成分块之间的完全支配
    :param template: Digraph R
    :param parts: 与 R 的顶点一一对应的 Digraph 列表
    :return: Digraph
    """
    if len(parts) != template.n:
        raise DigraphError('Blow-up needs {} parts, got {}'.format(template.n, len(parts)))
    offsets = part_offsets(parts)
    total = offsets[-1]
    matrix = np.zeros((total, total), dtype=bool)
    for i, part in enumerate(parts):
        matrix[offsets[i]:offsets[i + 1], offsets[i]:offsets[i + 1]] = part.adj
    for i, j in template.arcs():
        matrix[offsets[i]:offsets[i + 1], offsets[j]:offsets[j + 1]] = True
    return Digraph(matrix)


def part_offsets(parts):
    """
    :return: 每个分块在膨胀图中的起始编号，最后一项是总顶点数
    """
    offsets = [0]
    for part in parts:
        offsets.append(offsets[-1] + part.n)
    return offsets


def hamiltonian_path(digraph):
    """
    半完全有向图的哈密顿路，按顶点编号依次插入：
    插在第一个满足 前驱->v->后继 的位置，或者首尾
    :return: 顶点列表
    """
    require_semicomplete(digraph, 'hamiltonian_path')
    if digraph.n == 0:
        return []
    adj = digraph.adj
    path = [0]
    for v in range(1, digraph.n):
        position = None
        if adj[v, path[0]]:
            position = 0
        else:
            for i in range(1, len(path)):
                if adj[path[i - 1], v] and adj[v, path[i]]:
                    position = i
                    break
            if position is None:
                position = len(path)
        path.insert(position, v)
    return path


def is_path(digraph, vertices):
    """
    顶点互不相同，并且相邻两点之间有弧
    """
    if len(vertices) == 0 or len(set(vertices)) != len(vertices):
        return False
    if any(not (0 <= v < digraph.n) for v in vertices):
        return False
    adj = digraph.adj
    return all(adj[vertices[i], vertices[i + 1]] for i in range(len(vertices) - 1))


def semidegree(digraph):
    """
    :return: (最小出度, 最小入度, 最小半度)
    """
    if digraph.n == 0:
        return 0, 0, 0
    out_min = int(digraph.out_degrees().min())
    in_min = int(digraph.in_degrees().min())
    return out_min, in_min, min(out_min, in_min)
