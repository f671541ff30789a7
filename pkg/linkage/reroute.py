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

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Tuple, Dict, List, Optional

from linkage.common.constants import LOGGER_NAME
from linkage.common.exceptions import RerouteError
from linkage.common.loggers import trace_enabled
from linkage.connectivity import PathSystem

logger = logging.getLogger(LOGGER_NAME)


class RerouteVariant(enum.Enum):
    STANDARD = 'standard'
    MOREOVER = 'moreover'


@dataclass
class RerouteTrace(object):
    """
    改道过程的中间结果，下标都是原路组中的下标
    pre: [(截断位置, 前置有用点)]，前置有用点为None表示整条路保留
    post: [(起始位置, c, d)]，c为None表示整条路保留
    third: [(起始位置, 可接受下标)]，相对 Q'' 的位置
    rules: 每条新路使用的规则 'P1'、'P2'、'P3'
    """
    pre: List[Tuple[int, Optional[int]]] = field(default_factory=list)
    post: List[Tuple[int, Optional[int], Optional[int]]] = field(default_factory=list)
    third: List[Tuple[int, Optional[int]]] = field(default_factory=list)
    rules: Dict[int, str] = field(default_factory=dict)
    sources: Dict[int, int] = field(default_factory=dict)

    def to_dict(self):
        return {
            'pre': [list(item) for item in self.pre],
            'post': [list(item) for item in self.post],
            'third': [list(item) for item in self.third],
            'rules': {str(j): rule for j, rule in sorted(self.rules.items())},
            'sources': {str(j): i for j, i in sorted(self.sources.items())},
        }

    def lines(self):
        for i, (cut, useful) in enumerate(self.pre):
            yield "reroute Q'[{}] cut={} pre-useful={}".format(i, cut, useful)
        for i, (start, c, d) in enumerate(self.post):
            yield "reroute Q''[{}] start={} post-useful={} d={}".format(i, start, c, d)
        for i, (start, index) in enumerate(self.third):
            yield "reroute Q'''[{}] start={} acceptable={}".format(i, start, index)
        for j, rule in sorted(self.rules.items()):
            yield 'reroute Q^[{}] rule={} from o[{}]'.format(j, rule, self.sources.get(j, j))


@dataclass(frozen=True)
class RerouteResult(object):
    """
    q_hat 中第 j 条路以 Y' 的第 j 个点为终点
    """
    q_hat: PathSystem
    s_prime: Tuple[int, ...]
    variant: RerouteVariant
    trace: RerouteTrace

    @property
    def origins(self):
        return tuple(self.q_hat.origins())

    def to_dict(self):
        return {
            'q_hat': self.q_hat.to_dict(),
            's_prime': list(self.s_prime),
            'variant': self.variant.value,
            'trace': self.trace.to_dict(),
        }


class _SubdivisionIndex(object):
    """
    每个内部顶点属于唯一一条细分路；分支点单独处理
    """

    def __init__(self, subdivision):
        self.subdivision = subdivision
        self.branch = set(subdivision.branch_set)
        self.owner = {}
        for pair, path in subdivision.paths.items():
            for position, v in enumerate(path[1:-1], 1):
                self.owner[v] = (pair, position)

    def path(self, a, b):
        return self.subdivision.paths[(a, b)]

    def tail(self, f):
        """
        :return: (b, P_ab[f, b])，f 不在细分中时返回 None
        """
        if f in self.branch:
            return f, (f,)
        if f not in self.owner:
            return None
        (a, b), position = self.owner[f]
        return b, self.subdivision.paths[(a, b)][position:]

    def head(self, t, allowed):
        """
        :param allowed: c 与 d 都要落在其中
        :return: (c, d, P_cd[c, t])，不满足时返回 None
        """
        if t in self.branch:
            if t not in allowed:
                return None
            others = sorted(allowed - {t})
            if not others:
                return None
            return t, others[0], (t,)
        if t not in self.owner:
            return None
        (c, d), position = self.owner[t]
        if c not in allowed or d not in allowed:
            return None
        return c, d, self.subdivision.paths[(c, d)][:position + 1]


def _vertices_of(paths, skip):
    found = set()
    for i, path in enumerate(paths):
        if i != skip:
            found.update(path)
    return found


def _pre_good(paths, index):
    """
    Q'：从起点扫描，在最早的可行位置截断，迭代到不动点
    """
    cut = [len(path) - 1 for path in paths]
    useful = [None] * len(paths)
    tails = [None] * len(paths)
    changed = True
    while changed:
        changed = False
        for i, path in enumerate(paths):
            others = _vertices_of([p[:cut[j] + 1] for j, p in enumerate(paths)], i)
            taken = set(useful[j] for j in range(len(paths)) if j != i and useful[j] is not None)
            for position in range(cut[i]):
                found = index.tail(path[position])
                if found is None:
                    continue
                b, tail = found
                if b in taken:
                    continue
                if set(tail[1:]) & (others | set(path[:position + 1])):
                    continue
                cut[i], useful[i], tails[i] = position, b, tail
                changed = True
                break
    return cut, useful, tails


def _post_good(paths, index, allowed):
    """
    Q''：从终点往回扫描，在最晚的可行位置截断，迭代到不动点
    """
    start = [0] * len(paths)
    useful = [None] * len(paths)
    ends = [None] * len(paths)
    heads = [None] * len(paths)
    changed = True
    while changed:
        changed = False
        for i, path in enumerate(paths):
            others = _vertices_of([p[start[j]:] for j, p in enumerate(paths)], i)
            taken = set(useful[j] for j in range(len(paths)) if j != i and useful[j] is not None)
            lowest = start[i] if useful[i] is None else start[i] + 1
            for position in range(len(path) - 1, lowest - 1, -1):
                found = index.head(path[position], allowed)
                if found is None:
                    continue
                c, d, head = found
                if c in taken:
                    continue
                if set(head[:-1]) & (others | set(path[position:])):
                    continue
                start[i], useful[i], ends[i], heads[i] = position, c, d, head
                changed = True
                break
    return start, useful, ends, heads


def _bundles(paths, cut, useful, tails, index, non_pre):
    """
    U_i：Q'_i 接上前置有用路，再接上从 b_i 到每个非前置有用点的细分路。
    返回每个 U_i 中从 o_i 到各顶点的路
    """
    bundles = {}
    for i, path in enumerate(paths):
        if useful[i] is None:
            continue
        trunk = tuple(path[:cut[i] + 1]) + tuple(tails[i][1:])
        routes = {}
        for position, v in enumerate(trunk):
            routes.setdefault(v, trunk[:position + 1])
        b = useful[i]
        for g in sorted(non_pre):
            if g == b:
                continue
            fan = index.path(b, g)
            for position, v in enumerate(fan[1:], 1):
                routes.setdefault(v, trunk + tuple(fan[1:position + 1]))
        bundles[i] = routes
    return bundles


def _acceptable(suffixes, bundles):
    """
    Q'''：Q'' 的后缀，起点落在某个 U_j 上，迭代到不动点
    """
    start = [0] * len(suffixes)
    index = [None] * len(suffixes)
    changed = True
    while changed:
        changed = False
        for i, path in enumerate(suffixes):
            others = _vertices_of([p[start[j]:] for j, p in enumerate(suffixes)], i)
            taken = set(index[j] for j in range(len(suffixes)) if j != i and index[j] is not None)
            lowest = start[i] if index[i] is None else start[i] + 1
            done = False
            for position in range(len(path) - 1, lowest - 1, -1):
                t = path[position]
                own = set(path[position:])
                for j in sorted(bundles):
                    if j in taken or t not in bundles[j]:
                        continue
                    if set(bundles[j][t][:-1]) & (others | own):
                        continue
                    start[i], index[i] = position, j
                    changed = done = True
                    break
                if done:
                    break
    return start, index


def _check_input(subdivision, q, origins, targets):
    if len(q) != len(origins) or len(q) != len(targets):
        raise RerouteError('precondition', 'expected {} paths, got {}'.format(len(origins), len(q)))
    problems = q.problems(origins, targets)
    if problems:
        raise RerouteError('precondition', problems[0])
    inside = set(subdivision.branch_set) | subdivision.interiors()
    if set(targets) & inside:
        raise RerouteError('precondition', "Y' meets the subdivision at {}".format(sorted(set(targets) & inside)))
    if set(origins) & set(targets):
        raise RerouteError('precondition', "O and Y' overlap")


def _audit(digraph, subdivision, q_hat, origins, targets, s_prime, variant):
    found = q_hat.problems(None, targets)
    if sorted(q_hat.origins()) != sorted(origins) and variant is RerouteVariant.STANDARD:
        found.append('origins {} differ from O {}'.format(sorted(q_hat.origins()), sorted(origins)))
    used = q_hat.vertices()
    if variant is RerouteVariant.STANDARD:
        for u, v in itertools.permutations(s_prime, 2):
            met = set(subdivision.path(u, v)) & used
            if met:
                found.append('P_{}{} meets Q^ at {}'.format(u, v, sorted(met)))
    else:
        starts = set(q_hat.origins())
        if not starts <= set(subdivision.branch_set):
            found.append("O' is not inside the branch set: {}".format(sorted(starts)))
        for u in sorted(set(subdivision.branch_set) - starts):
            for v in subdivision.branch_set:
                if u == v:
                    continue
                met = set(subdivision.path(u, v)) & used
                if met - ({v} & starts):
                    found.append('P_{}{} meets Q^ at {}'.format(u, v, sorted(met)))
    return found


def free_subdivision(digraph, subdivision, q, origins, targets, freed_min, variant=RerouteVariant.STANDARD):
    """
    改造路组 Q，使得一个大的分支子集 S' 上的细分路都不与新路组相交
    :param subdivision: 完全细分 F
    :param q: PathSystem，第 i 条路从 origins[i] 到 targets[i]
    :param freed_min: |S'| 的下限
    :param variant: MOREOVER 时要求 O 在分支集合中，只计算 Q''
    :return: RerouteResult
    """
    origins, targets = tuple(origins), tuple(targets)
    _check_input(subdivision, q, origins, targets)
    index = _SubdivisionIndex(subdivision)
    paths = [tuple(path) for path in q]
    branch = set(subdivision.branch_set)
    trace = RerouteTrace()

    if variant is RerouteVariant.MOREOVER:
        if not set(origins) <= branch:
            raise RerouteError('precondition', 'moreover variant needs O inside the branch set')
        start, post, ends, heads = _post_good(paths, index, branch)
        trace.post = list(zip(start, post, ends))
        q_hat = []
        for i, path in enumerate(paths):
            if post[i] is None:
                q_hat.append(path)
            else:
                q_hat.append(heads[i] + path[start[i] + 1:])
            trace.rules[i] = 'moreover'
            trace.sources[i] = i
        system = PathSystem.of(digraph, q_hat)
        s_prime = tuple(sorted(branch - set(system.origins())))
        return _finish(digraph, subdivision, system, origins, targets, s_prime, freed_min, variant, trace)

    cut, pre, tails = _pre_good(paths, index)
    trace.pre = list(zip(cut, pre))
    non_pre = branch - set(b for b in pre if b is not None)
    start, post, ends, heads = _post_good(paths, index, non_pre)
    trace.post = list(zip(start, post, ends))
    suffixes = [path[start[i]:] for i, path in enumerate(paths)]
    bundles = _bundles(paths, cut, pre, tails, index, non_pre)
    third_start, acceptable = _acceptable(suffixes, bundles)
    trace.third = list(zip(third_start, acceptable))
    if trace_enabled():
        for line in trace.lines():
            logger.debug(line)

    q_hat = {}
    k_pre = set(range(len(paths)))
    k_third = set(range(len(paths)))
    # (P1)
    for i in range(len(paths)):
        if pre[i] is None:
            q_hat[i] = paths[i]
            trace.rules[i], trace.sources[i] = 'P1', i
            k_pre.discard(i)
            k_third.discard(i)
    # (P2)
    for j in sorted(k_third):
        i = acceptable[j]
        if i is not None and i in k_pre:
            t = suffixes[j][third_start[j]]
            q_hat[j] = bundles[i][t] + suffixes[j][third_start[j] + 1:]
            trace.rules[j], trace.sources[j] = 'P2', i
            k_pre.discard(i)
            k_third.discard(j)
    # (P3)
    for i, j in zip(sorted(k_pre), sorted(k_third)):
        if post[j] is None:
            raise RerouteError('reconnect', 'path {} has no post-useful vertex for (P3)'.format(j), trace)
        b, c = pre[i], post[j]
        q_hat[j] = (paths[i][:cut[i] + 1] + tails[i][1:] + index.path(b, c)[1:] + heads[j][1:]
                    + paths[j][start[j] + 1:])
        trace.rules[j], trace.sources[j] = 'P3', i
    system = PathSystem.of(digraph, [q_hat[j] for j in range(len(paths))])
    useful = set(b for b in pre if b is not None) | set(c for c in post if c is not None)
    s_prime = tuple(sorted(branch - useful))
    return _finish(digraph, subdivision, system, origins, targets, s_prime, freed_min, variant, trace)


def _finish(digraph, subdivision, system, origins, targets, s_prime, freed_min, variant, trace):
    problems = _audit(digraph, subdivision, system, origins, targets, s_prime, variant)
    if problems:
        logger.warning('Reroute audit failed: {}'.format(problems[0]))
        raise RerouteError('audit', '; '.join(problems[:3]), trace)
    if len(s_prime) < freed_min:
        raise RerouteError('freed', "|S'|={} below {}".format(len(s_prime), freed_min), trace)
    logger.debug("Reroute {} freed {} branch vertices, rules {}".format(
        variant.value, len(s_prime), sorted(trace.rules.values())))
    return RerouteResult(system, s_prime, variant, trace)
