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
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Tuple, Optional

import numpy as np

from linkage.common.constants import LOGGER_NAME, DEGREE_RATIO, WINDOW_FACTOR, DEFAULT_ELL, SPLITS_FACTOR
from linkage.common.exceptions import DigraphError, BlowupError
from linkage.common.loggers import trace_enabled
from linkage.digraph import is_path
from linkage.oracle import shortest_path

logger = logging.getLogger(LOGGER_NAME)

INFINITY = float('inf')


def _ordered_pairs(branch_set):
    return [(a, b) for a, b in itertools.product(sorted(branch_set), repeat=2) if a != b]


def _interior(path):
    return path[1:-1]


@dataclass(frozen=True)
class PartialSubdivision(object):
    """
    部分细分：paths只包含已经实现的有序对
    """
    branch_set: Tuple[int, ...]
    paths: Dict[Tuple[int, int], Tuple[int, ...]]
    ell: int

    def path(self, a, b):
        return self.paths[(a, b)]

    def missing(self):
        return [pair for pair in _ordered_pairs(self.branch_set) if pair not in self.paths]

    def is_complete(self):
        return not self.missing()

    def vertices(self):
        found = set(self.branch_set)
        for path in self.paths.values():
            found.update(path)
        return found

    def interiors(self):
        return set(v for path in self.paths.values() for v in _interior(path))

    def problems(self, digraph):
        found = []
        branch = set(self.branch_set)
        owner = {}
        for (a, b), path in sorted(self.paths.items()):
            if path[0] != a or path[-1] != b:
                found.append('path for ({}, {}) has ends {} {}'.format(a, b, path[0], path[-1]))
            if len(path) - 1 > self.ell + 1:
                found.append('path for ({}, {}) has length {}'.format(a, b, len(path) - 1))
            if not is_path(digraph, path):
                found.append('path for ({}, {}) is not a directed path'.format(a, b))
            for v in _interior(path):
                if v in branch:
                    found.append('path for ({}, {}) passes branch vertex {}'.format(a, b, v))
                if v in owner:
                    found.append('paths for {} and ({}, {}) share {}'.format(owner[v], a, b, v))
                owner[v] = (a, b)
        return found

    def is_valid(self, digraph):
        return not self.problems(digraph)

    def to_dict(self):
        return {
            'branch_set': list(self.branch_set),
            'ell': self.ell,
            'paths': [{'pair': [a, b], 'path': list(path)} for (a, b), path in sorted(self.paths.items())],
        }


class Subdivision(PartialSubdivision):
    """
    T_ell K_s 的完全细分，每个有序对都有一条长度不超过 ell+1 的路
    """

    def problems(self, digraph):
        found = super(Subdivision, self).problems(digraph)
        missing = self.missing()
        if missing:
            found.append('{} pairs not realized, first {}'.format(len(missing), missing[0]))
        return found

    def restrict(self, branch_set):
        """
        限制到branch_set上的子细分
        """
        branch_set = tuple(sorted(branch_set))
        return Subdivision(branch_set, {pair: self.paths[pair] for pair in _ordered_pairs(branch_set)}, self.ell)

    @classmethod
    def from_partial(cls, partial):
        return cls(partial.branch_set, dict(partial.paths), partial.ell)


@dataclass(frozen=True)
class Blocked(object):
    """
    (u, v) 之间不存在避开 V(partial) 的短路
    """
    u: int
    v: int
    partial: PartialSubdivision

    def to_dict(self):
        return {'blocked': [self.u, self.v], 'partial': self.partial.to_dict()}


@dataclass(frozen=True)
class SubdivisionFound(object):
    """
    在第block个块上找到了完全细分
    """
    block: int
    subdivision: Subdivision


@dataclass(frozen=True)
class HallViolation(object):
    """
    |N(left)| < |left| 的证书
    """
    left: Tuple[int, ...]
    neighbours: Tuple[int, ...]

    def to_dict(self):
        return {'left': list(self.left), 'neighbours': list(self.neighbours)}


@dataclass(frozen=True)
class TTBlowup(object):
    """
    传递竞赛图的膨胀：下标小的部分完全控制下标大的部分
    """
    parts: Tuple[Tuple[int, ...], ...]
    block_map: Tuple[int, ...]

    def problems(self, digraph):
        found = []
        for i, part in enumerate(self.parts):
            if not part:
                found.append('part {} is empty'.format(i))
        for i, j in itertools.combinations(range(len(self.parts)), 2):
            if self.parts[i] and self.parts[j] and not digraph.dominates(self.parts[i], self.parts[j]):
                found.append('part {} does not dominate part {}'.format(i, j))
        seen = set()
        for part in self.parts:
            if seen & set(part):
                found.append('parts overlap on {}'.format(sorted(seen & set(part))))
            seen.update(part)
        return found

    def is_valid(self, digraph):
        return not self.problems(digraph)

    def part_of_block(self, block):
        return self.parts[self.block_map.index(block)]

    def to_dict(self):
        return {'parts': [list(part) for part in self.parts], 'block_map': list(self.block_map)}


@dataclass(frozen=True)
class SplitRecord(object):
    """
    一次分裂操作的日志
    """
    h: int
    size: int
    block: int
    branch_set: Tuple[int, ...]
    blocked: Tuple[int, int]
    u_size: int
    v_size: int
    loss: int
    bound: int

    def to_dict(self):
        return {
            'h': self.h,
            'size': self.size,
            'block': self.block,
            'branch_set': list(self.branch_set),
            'blocked': list(self.blocked),
            'u_size': self.u_size,
            'v_size': self.v_size,
            'loss': self.loss,
            'bound': self.bound,
        }

    def __str__(self):
        return 'split h={} |G_h|={} blocked={} |U\'|={} |V\'|={} loss={} bound={}'.format(
            self.h, self.size, self.blocked, self.u_size, self.v_size, self.loss, self.bound)


@dataclass
class SplitParams(object):
    """
    分裂过程的参数
    :param s: 分支集合大小
    :param ell: 细分路长度上限为 ell+1
    :param part_min: 最终每个部分的最小规模
    :param splits_factor: 序列长度为 splits_factor * alpha
    :param window: 入度窗口宽度，None 时取 WINDOW_FACTOR * |A_h|
    :param ratio: 度数下限比例
    """
    s: int
    part_min: int
    ell: int = DEFAULT_ELL
    splits_factor: int = SPLITS_FACTOR
    window: Optional[int] = None
    ratio: object = field(default=DEGREE_RATIO)

    def __post_init__(self):
        if self.s < 2 or self.part_min < 1 or self.ell < 0 or self.splits_factor < 1:
            raise DigraphError('Invalid split parameters: {}'.format(self))


def _degrees_within(digraph, vertices):
    """
    导出子图中的 (出度, 入度) 向量，顺序与vertices相同
    """
    sub = digraph.adj[np.ix_(vertices, vertices)]
    return sub.sum(axis=1), sub.sum(axis=0)


def degree_window_subset(digraph, s, window=None, ratio=DEGREE_RATIO, within=None):
    """
    找s个点，出度入度都不低于 ratio*n，且入度之差不超过window。
    按入度排序后用宽度为window的滑动窗口寻找
    :param within: 只在这些顶点上计算（导出子图中的度数）
    :return: 顶点元组，找不到时返回None
    """
    vertices = sorted(within) if within is not None else list(digraph.vertices())
    n = len(vertices)
    if s > n:
        return None
    if window is None:
        window = WINDOW_FACTOR * s
    outs, ins = _degrees_within(digraph, vertices)
    floor = ratio * n
    survivors = sorted((int(d_in), v) for v, d_out, d_in in zip(vertices, outs, ins)
                       if d_out >= floor and d_in >= floor)
    lo = 0
    for hi in range(len(survivors)):
        while survivors[hi][0] - survivors[lo][0] > window:
            lo += 1
        if hi - lo + 1 >= s:
            return tuple(sorted(v for _, v in survivors[lo:lo + s]))
    return None


def lowest_spread_subset(digraph, s, within):
    """
    入度（导出子图中）最集中的s个点，degree_window_subset失败时的后备
    """
    vertices = sorted(within)
    if s > len(vertices):
        return None
    _, ins = _degrees_within(digraph, vertices)
    ranked = sorted(zip((int(d) for d in ins), vertices))
    best = min(range(len(ranked) - s + 1), key=lambda i: (ranked[i + s - 1][0] - ranked[i][0], i))
    return tuple(sorted(v for _, v in ranked[best:best + s]))


def grow_partial_subdivision(digraph, branch_set, ell, allowed=None):
    """
    按字典序遍历有序对，贪心地为每个对找一条长度不超过 ell+1 的路，
    内部避开分支集合以及已经使用过的内部顶点
    :param allowed: 可以作为内部顶点的集合，None表示全部
    :return: PartialSubdivision
    """
    n = digraph.n
    branch_set = tuple(sorted(set(branch_set)))
    region = np.ones(n, dtype=bool) if allowed is None else np.zeros(n, dtype=bool)
    if allowed is not None:
        region[list(allowed)] = True
    region[list(branch_set)] = False
    adj = digraph.adj
    paths = {}
    for a, b in _ordered_pairs(branch_set):
        if adj[a, b]:
            paths[(a, b)] = (a, b)
            continue
        if ell == 0:
            continue
        region[b] = True
        path = shortest_path(adj, a, b, region)
        region[b] = False
        if path is None or len(path) - 1 > ell + 1:
            continue
        paths[(a, b)] = tuple(path)
        region[path[1:-1]] = False
    partial = PartialSubdivision(branch_set, paths, ell)
    if trace_enabled():
        logger.debug('Partial subdivision on {}: {}/{} pairs'.format(
            list(branch_set), len(paths), len(branch_set) * (len(branch_set) - 1)))
    return partial


def subdivide_on(digraph, branch_set, ell, allowed=None):
    """
    以branch_set为分支集合生长细分
    :return: Subdivision 或者 Blocked（第一个未实现的有序对）
    """
    partial = grow_partial_subdivision(digraph, branch_set, ell, allowed)
    missing = partial.missing()
    if not missing:
        return Subdivision.from_partial(partial)
    u, v = missing[0]
    return Blocked(u, v, partial)


def find_subdivision(digraph, host, s, ell, allowed=None):
    """
    在host上选一个分支集合并生长细分
    :param host: 分支集合从这里选
    :return: Subdivision 或者 Blocked
    """
    host = sorted(set(host))
    if len(host) < s:
        raise DigraphError('Host set of size {} is smaller than s={}'.format(len(host), s))
    branch = degree_window_subset(digraph, s, within=host)
    if branch is None:
        branch = lowest_spread_subset(digraph, s, host)
    return subdivide_on(digraph, branch, ell, allowed)


def hall_matching(left, right, edges):
    """
    Hopcroft-Karp，求覆盖左侧的匹配
    :param left: 左侧顶点数
    :param right: 右侧顶点数
    :param edges: (i, j) 列表
    :return: {i: j} 覆盖全部左侧顶点，或者 HallViolation
    """
    graph = {u: [] for u in range(left)}
    for u, v in sorted(set(edges)):
        if not (0 <= u < left and 0 <= v < right):
            raise DigraphError('Edge ({}, {}) out of range'.format(u, v))
        graph[u].append(v)
    match = {}
    match_reverse = {}
    layer = {}

    def breadth_first_search():
        queue = deque()
        for u in graph:
            if u in match:
                layer[u] = INFINITY
            else:
                layer[u] = 0
                queue.append(u)
        layer[None] = INFINITY
        while queue:
            u = queue.popleft()
            if layer[u] < layer[None]:
                for v in graph[u]:
                    following = match_reverse.get(v)
                    if layer[following] is INFINITY:
                        layer[following] = layer[u] + 1
                        queue.append(following)
        return layer[None] is not INFINITY

    def depth_first_search(u):
        for v in graph[u]:
            following = match_reverse.get(v)
            if layer[following] == layer[u] + 1:
                if following is None or depth_first_search(following):
                    match[u], match_reverse[v] = v, u
                    return True
        layer[u] = INFINITY
        return False

    while breadth_first_search():
        for u in graph:
            if u not in match:
                depth_first_search(u)

    if len(match) == left:
        return dict(sorted(match.items()))

    # 从一个未匹配的左侧点出发沿交错路能到达的左侧点构成违反集合
    root = min(u for u in graph if u not in match)
    reached_left = {root}
    reached_right = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph[u]:
            if v in reached_right:
                continue
            reached_right.add(v)
            w = match_reverse.get(v)
            if w is not None and w not in reached_left:
                reached_left.add(w)
                queue.append(w)
    return HallViolation(tuple(sorted(reached_left)), tuple(sorted(reached_right)))


def _split_once(digraph, part, h, block_of, params, alpha):
    """
    在 G_h 上做一次分裂
    :return: (SplitRecord, V', U') 或者 Subdivision（分支集合所在块的下标与细分）
    """
    size = len(part)
    wanted = params.s * alpha
    window = params.window if params.window is not None else WINDOW_FACTOR * wanted
    a_h = None
    if size >= wanted:
        a_h = degree_window_subset(digraph, wanted, window, params.ratio, within=part)
        if a_h is None:
            a_h = lowest_spread_subset(digraph, wanted, part)
    candidates = a_h if a_h is not None else part
    by_block = {}
    for v in candidates:
        by_block.setdefault(block_of[v], []).append(v)
    block, chosen = max(sorted(by_block.items()), key=lambda item: len(item[1]))
    if len(chosen) < params.s:
        raise BlowupError('branch-set', 'G_{} of size {} has no {} vertices in one block'.format(
            h, size, params.s), splits=None)
    if a_h is None:
        chosen = lowest_spread_subset(digraph, params.s, [v for v in part if block_of[v] == block])
    branch = tuple(sorted(chosen)[:params.s])
    outcome = subdivide_on(digraph, branch, params.ell)
    if isinstance(outcome, Subdivision):
        return block, outcome
    u, v = outcome.u, outcome.v
    inside = set(part)
    used = outcome.partial.vertices()
    u_prime = [w for w in digraph.out_neighbours(u) if w in inside and w not in used]
    v_prime = [w for w in digraph.in_neighbours(v) if w in inside and w not in used]
    in_u = set(w for w in digraph.in_neighbours(u) if w in inside)
    in_v = set(w for w in digraph.in_neighbours(v) if w in inside)
    ins = digraph.adj[np.ix_(list(part), list(branch))].sum(axis=0)
    spread = int(ins.max() - ins.min())
    loss = size - len(set(u_prime) | set(v_prime))
    bound = len(used & inside) + spread + len(in_u - in_v)
    record = SplitRecord(h, size, block, branch, (u, v), len(u_prime), len(v_prime), loss, bound)
    return record, v_prime, u_prime


def split_to_tt_blowup(digraph, blocks, params):
    """
    分裂过程：维护序列 G_1..G_{5 alpha}，每次在最大的 G_h 上分裂，
    做完 5 alpha - 1 次后用Hall匹配为每个块选一个部分
    :param digraph: 宿主图，通常是各块并集的导出子图
    :param blocks: 两两不交的顶点块 U_1..U_alpha
    :param params: SplitParams
    :return: (TTBlowup, [SplitRecord]) 或者 SubdivisionFound
    """
    blocks = [tuple(sorted(block)) for block in blocks]
    alpha = len(blocks)
    if alpha == 0:
        raise DigraphError('split_to_tt_blowup needs at least one block')
    block_of = {}
    for i, block in enumerate(blocks):
        for v in block:
            if v in block_of:
                raise DigraphError('Blocks {} and {} share vertex {}'.format(block_of[v], i, v))
            block_of[v] = i
    length = params.splits_factor * alpha
    sequence = [sorted(block_of)] + [[] for _ in range(length - 1)]
    splits = []
    while any(not part for part in sequence):
        h = max(range(length), key=lambda i: (len(sequence[i]), -i))
        try:
            outcome = _split_once(digraph, sequence[h], h, block_of, params, alpha)
        except BlowupError as e:
            raise BlowupError(e.stage, e.detail, splits=splits)
        if isinstance(outcome[1], Subdivision):
            logger.info('Complete subdivision on block {} during split {}'.format(outcome[0], len(splits)))
            return SubdivisionFound(*outcome)
        record, v_prime, u_prime = outcome
        if trace_enabled():
            logger.debug(str(record))
        if not u_prime or not v_prime:
            raise BlowupError('split', 'empty side after {}'.format(record), splits=splits + [record])
        if set(u_prime) & set(v_prime) or not digraph.dominates(v_prime, u_prime):
            raise BlowupError('split-order', "V' does not dominate U' after {}".format(record),
                              splits=splits + [record])
        splits.append(record)
        sequence = sequence[:h] + [v_prime, u_prime] + sequence[h + 1:-1]

    sizes = [len(part) for part in sequence]
    if max(sizes) > 5 * min(sizes):
        logger.debug('Part sizes outside the 1/5..5 ratio: {}'.format(sizes))
    edges = []
    for i, block in enumerate(blocks):
        members = set(block)
        for j, part in enumerate(sequence):
            if len(members.intersection(part)) >= params.part_min:
                edges.append((i, j))
    matching = hall_matching(alpha, length, edges)
    if isinstance(matching, HallViolation):
        raise BlowupError('hall', 'blocks {} meet only parts {}'.format(
            list(matching.left), list(matching.neighbours)), blocks=matching.left, splits=splits)
    chosen = sorted((j, i) for i, j in matching.items())
    parts = tuple(tuple(sorted(set(sequence[j]) & set(blocks[i]))) for j, i in chosen)
    blowup = TTBlowup(parts, tuple(i for _, i in chosen))
    problems = blowup.problems(digraph)
    if problems:
        raise BlowupError('domination', problems[0], splits=splits)
    logger.info('TT blow-up with {} parts after {} splits, sizes {}'.format(
        alpha, len(splits), [len(part) for part in parts]))
    return blowup, splits
