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
import logging
import threading
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from linkage.common.constants import LOGGER_NAME, DEFAULT_BUDGET
from linkage.common.exceptions import TerminalError, DigraphError
from linkage.connectivity import PathSystem

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class LinkageInstance(object):
    """
    2k个互不相同的端点，第 i 条路从 x[i] 到 y[i]
    """
    x: Tuple[int, ...]
    y: Tuple[int, ...]

    @classmethod
    def of(cls, xs, ys):
        return cls(tuple(int(v) for v in xs), tuple(int(v) for v in ys))

    @property
    def k(self):
        return len(self.x)

    def terminals(self):
        return self.x + self.y

    def validate(self, n):
        if len(self.x) != len(self.y):
            raise TerminalError('Got {} sources but {} targets'.format(len(self.x), len(self.y)))
        terminals = self.terminals()
        if len(set(terminals)) != len(terminals):
            raise TerminalError('Terminals must be distinct: {}'.format(list(terminals)))
        for v in terminals:
            if not 0 <= v < n:
                raise TerminalError('Terminal {} out of range for n={}'.format(v, n))

    def to_dict(self):
        return {'x': list(self.x), 'y': list(self.y)}


@dataclass(frozen=True)
class Infeasible(object):
    """
    穷尽搜索之后确认不存在连接
    """
    expanded: int


@dataclass(frozen=True)
class BudgetExhausted(object):
    """
    节点扩展次数用完或者被取消，结论未知
    """
    expanded: int
    cancelled: bool = False


@dataclass(frozen=True)
class CounterTuple(object):
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    result: Infeasible

    def to_dict(self):
        return {'x': list(self.x), 'y': list(self.y)}


class SearchBudget(object):
    """
    节点扩展上限，可以在其他线程中调用cancel()提前结束搜索
    """

    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = limit
        self.spent = 0
        self.__cancelled = threading.Event()

    def spend(self, amount=1):
        """
        :return: 还能继续时返回True
        """
        self.spent += amount
        return self.spent <= self.limit and not self.__cancelled.is_set()

    def cancel(self):
        self.__cancelled.set()

    @property
    def cancelled(self):
        return self.__cancelled.is_set()


class _OutOfBudget(Exception):
    pass


def _as_budget(budget):
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(DEFAULT_BUDGET if budget is None else budget)


def reachable(adj, start, region):
    """
    在region（布尔向量）内从start出发能到达的顶点，start本身总在结果中
    """
    seen = np.zeros(adj.shape[0], dtype=bool)
    seen[start] = True
    frontier = seen.copy()
    while frontier.any():
        step = adj[frontier].any(axis=0) & region & ~seen
        seen |= step
        frontier = step
    return seen


def shortest_path(adj, source, target, region):
    """
    region内的最短路（BFS，按编号升序扩展），不存在时返回None
    """
    n = adj.shape[0]
    parent = np.full(n, -1, dtype=np.intp)
    seen = np.zeros(n, dtype=bool)
    seen[source] = True
    frontier = [source]
    while frontier and not seen[target]:
        following = []
        for u in frontier:
            fresh = np.flatnonzero(adj[u] & region & ~seen)
            seen[fresh] = True
            parent[fresh] = u
            following.extend(fresh.tolist())
        frontier = following
    if not seen[target]:
        return None
    path = [target]
    while path[-1] != source:
        path.append(int(parent[path[-1]]))
    return path[::-1]


class _LinkageSearch(object):
    """
    逐条构造路径的深度优先搜索。
    只搜索没有前向弦的路（路上的点不指向路上更靠后的非相邻点），
    点数最少的连接总是这种形式，所以穷尽搜索仍然是完备的。
    """

    def __init__(self, digraph, instance, budget):
        self.adj = digraph.adj
        self.n = digraph.n
        self.instance = instance
        self.budget = budget
        self.terminal_mask = np.zeros(self.n, dtype=bool)
        self.terminal_mask[list(instance.terminals())] = True
        self.failed = set()
        self.expanded = 0

    def _spend(self):
        self.expanded += 1
        if not self.budget.spend():
            raise _OutOfBudget()

    def _pair_region(self, free, j):
        region = free.copy()
        region[self.instance.x[j]] = True
        region[self.instance.y[j]] = True
        return region

    def _frontiers(self, free, pairs):
        """
        :return: 每个剩余端点对的可达集合大小，有不可达的对时返回None
        """
        sizes = []
        for j in pairs:
            region = self._pair_region(free, j)
            seen = reachable(self.adj, self.instance.x[j], region)
            if not seen[self.instance.y[j]]:
                return None
            sizes.append(int(seen.sum()))
        return sizes

    def solve(self, free, pairs):
        """
        :param free: 可以使用的非端点顶点
        :param pairs: 还没有连接的端点对下标
        :return: {下标: 路径} 或 None
        """
        if not pairs:
            return {}
        key = (free.tobytes(), pairs)
        if key in self.failed:
            return None
        self._spend()
        if len(pairs) == 1:
            j = pairs[0]
            path = shortest_path(self.adj, self.instance.x[j], self.instance.y[j], self._pair_region(free, j))
            if path is None:
                self.failed.add(key)
                return None
            return {j: path}
        sizes = self._frontiers(free, pairs)
        if sizes is None:
            self.failed.add(key)
            return None
        chosen = pairs[sizes.index(min(sizes))]
        rest = tuple(j for j in pairs if j != chosen)
        shadow = np.zeros(self.n, dtype=np.int32)
        result = self._extend(free, chosen, rest, [self.instance.x[chosen]], shadow)
        if result is None:
            self.failed.add(key)
        return result

    def _extend(self, free, j, rest, path, shadow):
        adj = self.adj
        head = path[-1]
        target = self.instance.y[j]
        if shadow[target]:
            return None
        if adj[head, target]:
            remaining = free.copy()
            remaining[path] = False
            found = self.solve(remaining, rest)
            if found is None:
                return None
            found[j] = path + [target]
            return found
        self._spend()
        blocked = free.copy()
        blocked[path] = False
        candidates = np.flatnonzero(adj[head] & blocked & (shadow == 0)).tolist()
        if not candidates:
            return None
        shadow += adj[head]
        ahead = blocked & (shadow == 0)
        ahead[target] = True
        try:
            for c in candidates:
                if not reachable(adj, c, ahead)[target]:
                    continue
                others = blocked.copy()
                others[c] = False
                if self._frontiers(others, rest) is None:
                    continue
                found = self._extend(free, j, rest, path + [c], shadow)
                if found is not None:
                    return found
        finally:
            shadow -= adj[head]
        return None


def find_linkage_exact(digraph, instance, budget=DEFAULT_BUDGET):
    """
    精确求解一个k-连接实例
    :param digraph:
    :param instance: LinkageInstance
    :param budget: 节点扩展上限（int）或者 SearchBudget
    :return: PathSystem | Infeasible | BudgetExhausted
    """
    instance.validate(digraph.n)
    budget = _as_budget(budget)
    if budget.limit <= 0:
        return BudgetExhausted(0, budget.cancelled)
    free = ~np.zeros(digraph.n, dtype=bool)
    free[list(instance.terminals())] = False
    search = _LinkageSearch(digraph, instance, budget)
    try:
        found = search.solve(free, tuple(range(instance.k)))
    except _OutOfBudget:
        logger.debug('Linkage search out of budget after {} expansions'.format(search.expanded))
        return BudgetExhausted(search.expanded, budget.cancelled)
    if found is None:
        logger.debug('Linkage search exhausted after {} expansions, infeasible'.format(search.expanded))
        return Infeasible(search.expanded)
    system = PathSystem.of(digraph, [found[j] for j in range(instance.k)])
    assert system.is_valid(instance.x, instance.y), system.problems(instance.x, instance.y)
    return system


def is_k_linked(digraph, k, budget=DEFAULT_BUDGET):
    """
    枚举全部有序的 2k 元组
    :return: True | CounterTuple | BudgetExhausted
    """
    if digraph.n < 2 * k:
        raise DigraphError('is_k_linked needs n >= 2k, got n={} k={}'.format(digraph.n, k))
    budget = _as_budget(budget)
    for terminals in itertools.permutations(range(digraph.n), 2 * k):
        instance = LinkageInstance.of(terminals[:k], terminals[k:])
        result = find_linkage_exact(digraph, instance, budget)
        if isinstance(result, Infeasible):
            logger.info('Counter tuple x={} y={}'.format(list(instance.x), list(instance.y)))
            return CounterTuple(instance.x, instance.y, result)
        if isinstance(result, BudgetExhausted):
            return result
    return True
