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
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Tuple, Optional

import numpy as np

from linkage.common.constants import LOGGER_NAME, DEFAULT_BUDGET, VERDICT_PASS, VERDICT_FAIL, \
    VERDICT_INCONCLUSIVE, CLAIM_SEMIDEGREE, CLAIM_CONNECTIVITY, CLAIM_NO_LINKAGE, CLAIM_CONSTRUCTION
from linkage.common.exceptions import CounterexampleError, ParseError
from linkage.connectivity import vertex_connectivity, PathSystem
from linkage.digraph import Digraph, circulant_tournament, backward_path_tournament, hamiltonian_path, \
    semidegree
from linkage.oracle import LinkageInstance, find_linkage_exact, Infeasible, BudgetExhausted, reachable

logger = logging.getLogger(LOGGER_NAME)


class Variant(enum.Enum):
    """
    x_i 在 D2 中的出邻居去掉 P^k 的哪个点：
    CONSTRUCTION 去掉 p^k_k，CLAIM 去掉 p^k_{m-k+1}
    """
    CONSTRUCTION = 'construction'
    CLAIM = 'claim'

    def excluded_index(self, k, m):
        """
        :return: P^k 中被去掉的点的下标（从1开始）
        """
        return k if self is Variant.CONSTRUCTION else m - k + 1


def check_parameters(k, m):
    if k < 2:
        raise CounterexampleError('Counterexample needs k >= 2, got {}'.format(k))
    if m % 2 == 0:
        raise CounterexampleError('Block size m must be odd, got {}'.format(m))
    if m < 10 * k:
        raise CounterexampleError('Block size m must be at least 10k = {}, got {}'.format(10 * k, m))


@dataclass(frozen=True)
class D1Layout(object):
    """
    D1 的顶点类别，编号为 D1 内部的编号：
    正则块 W, S, x'_1, Y_2 占 0..m-1，之后是 X'_2，最后是 y_1
    """
    k: int
    m: int
    w: Tuple[int, ...]
    s: Tuple[int, ...]
    x_prime: Tuple[int, ...]
    y: Tuple[int, ...]

    @property
    def regular_block(self):
        return self.w + self.s + (self.x_prime[0],) + self.y[1:]

    @property
    def size(self):
        return self.m + self.k


@dataclass(frozen=True)
class D2Layout(object):
    """
    D2 的分块，blocks[i-1][j-1] 是 p^i_j
    """
    k: int
    m: int
    blocks: Tuple[Tuple[int, ...], ...]
    regular_order: Tuple[int, ...]

    @property
    def h(self):
        return self.m // 2

    def p(self, i, j):
        return self.blocks[i - 1][j - 1]

    def second_half(self):
        return self.blocks[1][self.h:]

    def e1(self):
        return [(self.p(self.k, i), self.p(i, 1)) for i in range(1, self.k)]

    def e2(self):
        return [(u, v) for u in self.second_half() for v in self.blocks[0]]


@dataclass(frozen=True)
class CounterexampleLayout(object):
    """
    反例 D 的全部顶点类别与弧束
    """
    k: int
    m: int
    variant: Variant
    w: Tuple[int, ...]
    s: Tuple[int, ...]
    x_prime: Tuple[int, ...]
    y: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    x: Tuple[int, ...]
    regular_order: Tuple[int, ...]

    @property
    def h(self):
        return self.m // 2

    @property
    def n(self):
        return (self.k + 1) * self.m + 2 * self.k

    @property
    def regular_block(self):
        return self.w + self.s + (self.x_prime[0],) + self.y[1:]

    @property
    def d1(self):
        return self.regular_block + self.x_prime[1:] + (self.y[0],)

    @property
    def d2(self):
        return tuple(v for block in self.blocks for v in block)

    def p(self, i, j):
        return self.blocks[i - 1][j - 1]

    def second_half(self):
        return self.blocks[1][self.h:]

    def excluded(self):
        return self.p(self.k, self.variant.excluded_index(self.k, self.m))

    def x_out_d2(self, i):
        """
        N+_{D2}(x_i)，i 从1开始
        """
        removed = set(self.second_half())
        removed.add(self.excluded())
        return tuple(v for v in self.blocks[i - 1] if v not in removed)

    def bundles(self):
        h, m, k = self.h, self.m, self.k
        return {
            'E1': [[self.p(k, i), self.p(i, 1)] for i in range(1, k)],
            'E2': [[u, v] for u in self.second_half() for v in self.blocks[0]],
            'E3': [[self.p(i, m), self.x_prime[i - 1]] for i in range(1, k + 1)],
            'E4': [[self.p(2, j), self.y[0]] for j in range(h + 1, m + 1)],
        }

    def instance(self):
        return LinkageInstance.of(self.x, self.y)

    def to_dict(self):
        return {
            'k': self.k,
            'm': self.m,
            'h': self.h,
            'variant': self.variant.value,
            'W': list(self.w),
            'S': list(self.s),
            "X'": list(self.x_prime),
            'Y': list(self.y),
            'X': list(self.x),
            'P': [list(block) for block in self.blocks],
            'regular_order': list(self.regular_order),
            'bundles': self.bundles(),
            'instance': self.instance().to_dict(),
        }

    @classmethod
    def from_dict(cls, value):
        try:
            return cls(
                k=int(value['k']),
                m=int(value['m']),
                variant=Variant(value.get('variant', Variant.CONSTRUCTION.value)),
                w=tuple(value['W']),
                s=tuple(value['S']),
                x_prime=tuple(value["X'"]),
                y=tuple(value['Y']),
                blocks=tuple(tuple(block) for block in value['P']),
                x=tuple(value['X']),
                regular_order=tuple(value['regular_order']),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError('Invalid counterexample layout: {}'.format(e))


def build_D1(k, m):
    """
    D1：W∪S∪{x'_1}∪Y_2 上是循环正则竞赛图，X'_2 内部传递，
    W∪{x'_1}∪Y_2 -> X'_2 -> {y_1}∪S，S -> y_1 -> {x'_1}∪W∪Y_2
    :return: (Digraph, D1Layout)
    """
    check_parameters(k, m)
    w = tuple(range(m - 2 * k + 1))
    s = tuple(range(len(w), len(w) + k - 1))
    x1 = len(w) + len(s)
    y2 = tuple(range(x1 + 1, x1 + k))
    x2 = tuple(range(m, m + k - 1))
    y1 = m + k - 1
    layout = D1Layout(k, m, w, s, (x1,) + x2, (y1,) + y2)

    matrix = np.zeros((m + k, m + k), dtype=bool)
    matrix[:m, :m] = circulant_tournament(m).adj
    for a, b in itertools.combinations(x2, 2):
        matrix[a, b] = True
    for u in w + (x1,) + y2:
        matrix[u, list(x2)] = True
    for u in x2:
        matrix[u, list(s) + [y1]] = True
    matrix[list(s), y1] = True
    matrix[y1, [x1] + list(w) + list(y2)] = True
    return Digraph(matrix), layout


def build_D2(k, m):
    """
    D2：P^1..P^{k-1} 是后向路竞赛图，P^k 是循环正则竞赛图并按其哈密顿路重新编号；
    E1、E2 之外的块间弧都从编号小的块指向编号大的块
    :return: (Digraph, D2Layout)
    """
    check_parameters(k, m)
    blocks = tuple(tuple(range(i * m, (i + 1) * m)) for i in range(k))
    regular = circulant_tournament(m)
    order = hamiltonian_path(regular)
    layout = D2Layout(k, m, blocks, tuple(order))

    n = k * m
    matrix = np.zeros((n, n), dtype=bool)
    backward = backward_path_tournament(m).adj
    for i in range(k - 1):
        matrix[i * m:(i + 1) * m, i * m:(i + 1) * m] = backward
    matrix[(k - 1) * m:, (k - 1) * m:] = regular.relabel(order).adj
    for i in range(k):
        for j in range(i + 1, k):
            matrix[i * m:(i + 1) * m, j * m:(j + 1) * m] = True
    # E1 与 E2 反转对应的块间弧
    for u, v in layout.e1() + layout.e2():
        matrix[v, u] = False
        matrix[u, v] = True
    return Digraph(matrix), layout


def build_counterexample(k, m, variant=Variant.CONSTRUCTION):
    """
    组装反例 D：顶点依次为 D1、D2、X
    :return: (Digraph, LinkageInstance, CounterexampleLayout)
    """
    check_parameters(k, m)
    d1, l1 = build_D1(k, m)
    d2, l2 = build_D2(k, m)
    n1, n2 = d1.n, d2.n
    off = n1
    blocks = tuple(tuple(v + off for v in block) for block in l2.blocks)
    x = tuple(range(n1 + n2, n1 + n2 + k))
    layout = CounterexampleLayout(k, m, variant, l1.w, l1.s, l1.x_prime, l1.y, blocks, x, l2.regular_order)

    n = layout.n
    matrix = np.zeros((n, n), dtype=bool)
    matrix[:n1, :n1] = d1.adj
    matrix[off:off + n2, off:off + n2] = d2.adj
    for a, b in itertools.combinations(x, 2):
        matrix[a, b] = True
    y_set = set(layout.y)
    for u in layout.d1:
        if u not in y_set:
            matrix[u, list(x)] = True
    matrix[layout.x_prime[0], x[0]] = False
    matrix[x[0], layout.x_prime[0]] = True
    for i in range(k):
        for j in range(k):
            if i == j:
                matrix[layout.y[i], x[i]] = True
            else:
                matrix[x[i], layout.y[j]] = True
    d2_all = list(layout.d2)
    for i in range(k):
        outs = set(layout.x_out_d2(i + 1))
        for v in d2_all:
            if v in outs:
                matrix[x[i], v] = True
            else:
                matrix[v, x[i]] = True
    matrix[np.ix_(list(layout.d1), d2_all)] = True
    for u, v in layout.bundles()['E3'] + layout.bundles()['E4']:
        matrix[v, u] = False
        matrix[u, v] = True
    digraph = Digraph(matrix)
    logger.info('Built counterexample k={} m={} variant={} n={}'.format(k, m, variant.value, n))
    return digraph, layout.instance(), layout


class ConstructionRules(object):
    """
    按构造规则给每条弧归类，用于审计输入是否就是构造出来的反例
    """

    def __init__(self, layout):
        self.layout = layout
        k, m, h = layout.k, layout.m, layout.h
        self.regular_pos = {v: i for i, v in enumerate(layout.regular_block)}
        self.x2 = {v: i for i, v in enumerate(layout.x_prime[1:])}
        self.x_idx = {v: i for i, v in enumerate(layout.x)}
        self.y_idx = {v: i for i, v in enumerate(layout.y)}
        self.w = set(layout.w)
        self.s = set(layout.s)
        self.x1 = layout.x_prime[0]
        self.y1 = layout.y[0]
        self.y2 = set(layout.y[1:])
        self.d1 = set(layout.d1)
        self.block_of = {}
        self.pos_of = {}
        for i, block in enumerate(layout.blocks):
            for j, v in enumerate(block):
                self.block_of[v] = i
                self.pos_of[v] = j
        self.second = set(layout.second_half())
        self.x_out = [set(layout.x_out_d2(i + 1)) for i in range(k)]
        self.e1 = set((u, v) for u, v in map(tuple, layout.bundles()['E1']))
        self.e3 = set((u, v) for u, v in map(tuple, layout.bundles()['E3']))
        self.e4 = set((u, v) for u, v in map(tuple, layout.bundles()['E4']))
        # P^k 的第 j 个点对应循环竞赛图中的顶点 regular_order[j]
        order = list(layout.regular_order)
        self.regular_label = order
        self.h = h
        self.m = m
        self.k = k
        self.rules = [
            ('D1 regular block', self._regular),
            ("X'_2 internal", lambda u, v: u in self.x2 and v in self.x2 and self.x2[u] < self.x2[v]),
            ("W+x'_1+Y_2 -> X'_2", lambda u, v: (u in self.w or u == self.x1 or u in self.y2) and v in self.x2),
            ("X'_2 -> y_1+S", lambda u, v: u in self.x2 and (v == self.y1 or v in self.s)),
            ('S -> y_1', lambda u, v: u in self.s and v == self.y1),
            ("y_1 -> x'_1+W+Y_2", lambda u, v: u == self.y1 and (v == self.x1 or v in self.w or v in self.y2)),
            ('backward block', self._backward),
            ('regular block P^k', self._block_k),
            ('E1', lambda u, v: (u, v) in self.e1),
            ('E2', lambda u, v: u in self.second and self.block_of.get(v) == 0),
            ('forward blocks', self._forward),
            ('X internal', lambda u, v: u in self.x_idx and v in self.x_idx and self.x_idx[u] < self.x_idx[v]),
            ('D1-Y -> X', self._d1_to_x),
            ("x_1 -> x'_1", lambda u, v: u == layout.x[0] and v == self.x1),
            ('x_i -> y_j', lambda u, v: u in self.x_idx and v in self.y_idx and self.x_idx[u] != self.y_idx[v]),
            ('y_i -> x_i', lambda u, v: u in self.y_idx and v in self.x_idx and self.x_idx[v] == self.y_idx[u]),
            ('x_i -> D2', lambda u, v: u in self.x_idx and v in self.x_out[self.x_idx[u]]),
            ('D2 -> x_i', lambda u, v: u in self.block_of and v in self.x_idx and u not in self.x_out[self.x_idx[v]]),
            ('E3', lambda u, v: (u, v) in self.e3),
            ('E4', lambda u, v: (u, v) in self.e4),
            ('D1 -> D2', lambda u, v: u in self.d1 and v in self.block_of
                and (v, u) not in self.e3 and (v, u) not in self.e4),
        ]

    def _regular(self, u, v):
        if u not in self.regular_pos or v not in self.regular_pos:
            return False
        return 1 <= (self.regular_pos[v] - self.regular_pos[u]) % self.m <= self.h

    def _backward(self, u, v):
        bu, bv = self.block_of.get(u), self.block_of.get(v)
        if bu is None or bu != bv or bu == self.k - 1:
            return False
        a, b = self.pos_of[u], self.pos_of[v]
        return b == a + 1 or a >= b + 2

    def _block_k(self, u, v):
        bu, bv = self.block_of.get(u), self.block_of.get(v)
        if bu != self.k - 1 or bv != self.k - 1:
            return False
        a, b = self.regular_label[self.pos_of[u]], self.regular_label[self.pos_of[v]]
        return 1 <= (b - a) % self.m <= self.h

    def _forward(self, u, v):
        bu, bv = self.block_of.get(u), self.block_of.get(v)
        if bu is None or bv is None or bu >= bv:
            return False
        if (v, u) in self.e1:
            return False
        return not (bu == 0 and v in self.second)

    def _d1_to_x(self, u, v):
        if u not in self.d1 or u in self.y_idx or v not in self.x_idx:
            return False
        return not (u == self.x1 and v == self.layout.x[0])

    def classify(self, u, v):
        return [name for name, rule in self.rules if rule(u, v)]


@dataclass(frozen=True)
class ConstructionAudit(object):
    """
    deviations：没有规则或者有多条规则对应的弧；missing：没有弧的顶点对
    """
    arcs: int
    deviations: Tuple[Tuple[int, int, Tuple[str, ...]], ...]
    missing: Tuple[Tuple[int, int], ...]
    digons: Tuple[Tuple[int, int], ...]

    @property
    def ok(self):
        return not self.deviations and not self.missing and not self.digons

    def to_dict(self):
        return {
            'arcs': self.arcs,
            'deviations': [{'arc': [u, v], 'rules': list(names)} for u, v, names in self.deviations],
            'missing': [list(pair) for pair in self.missing],
            'digons': [list(pair) for pair in self.digons],
        }


def audit_construction(digraph, layout):
    """
    逐条弧检查是否恰好对应一条构造规则
    """
    if digraph.n != layout.n:
        return ConstructionAudit(digraph.arc_count(), ((-1, -1, ('vertex count {} != {}'.format(
            digraph.n, layout.n),)),), (), ())
    rules = ConstructionRules(layout)
    deviations = []
    for u, v in digraph.arcs():
        names = rules.classify(u, v)
        if len(names) != 1:
            deviations.append((u, v, tuple(names)))
    adj = digraph.adj
    both = adj & adj.T
    neither = ~(adj | adj.T) & ~np.eye(digraph.n, dtype=bool)
    missing = tuple((int(a), int(b)) for a, b in zip(*np.nonzero(np.triu(neither, 1))))
    digons = tuple((int(a), int(b)) for a, b in zip(*np.nonzero(np.triu(both, 1))))
    return ConstructionAudit(digraph.arc_count(), tuple(deviations), missing, digons)


@dataclass
class Check(object):
    name: str
    verdict: str
    anchor: str
    value: object = None
    detail: str = ''
    cost_ms: int = 0

    def to_dict(self):
        return {
            'name': self.name,
            'verdict': self.verdict,
            'anchor': self.anchor,
            'value': self.value,
            'detail': self.detail,
            'cost_ms': self.cost_ms,
        }


@dataclass
class VerificationReport(object):
    k: int
    m: int
    variant: Variant
    checks: List[Check] = field(default_factory=list)
    audit: Optional[ConstructionAudit] = None
    linkage: Optional[PathSystem] = None

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    @property
    def overall(self):
        verdicts = [c.verdict for c in self.checks]
        if VERDICT_FAIL in verdicts:
            return VERDICT_FAIL
        if VERDICT_INCONCLUSIVE in verdicts:
            return VERDICT_INCONCLUSIVE
        return VERDICT_PASS

    @property
    def flagged(self):
        return self.audit is not None and not self.audit.ok

    def to_dict(self):
        return {
            'k': self.k,
            'm': self.m,
            'variant': self.variant.value,
            'overall': self.overall,
            'checks': [c.to_dict() for c in self.checks],
            'audit': self.audit.to_dict() if self.audit is not None else None,
            'linkage': self.linkage.to_dict() if self.linkage is not None else None,
        }


def _timed(check_fn):
    def wrapper(*args):
        start_time = time.time()
        check = check_fn(*args)
        check.cost_ms = int((time.time() - start_time) * 1000)
        logger.info('Check {} -> {} ({}ms)'.format(check.name, check.verdict, check.cost_ms))
        return check
    return wrapper


@_timed
def _check_semidegree(digraph, k, m):
    out_min, in_min, value = semidegree(digraph)
    verdict = VERDICT_PASS if value >= m // 2 else VERDICT_FAIL
    return Check('semidegree', verdict, CLAIM_SEMIDEGREE, value,
                 'out={} in={} required={}'.format(out_min, in_min, m // 2))


@_timed
def _check_connectivity(digraph, k, m):
    value = vertex_connectivity(digraph, limit=2 * k)
    verdict = VERDICT_PASS if value >= 2 * k else VERDICT_FAIL
    return Check('connectivity', verdict, CLAIM_CONNECTIVITY, value, 'capped at {}'.format(2 * k))


def _check_no_linkage(digraph, instance, budget, holder):
    start_time = time.time()
    result = find_linkage_exact(digraph, instance, budget)
    if isinstance(result, Infeasible):
        check = Check('no-linkage', VERDICT_PASS, CLAIM_NO_LINKAGE, 'infeasible',
                      'expanded={}'.format(result.expanded))
    elif isinstance(result, BudgetExhausted):
        check = Check('no-linkage', VERDICT_INCONCLUSIVE, CLAIM_NO_LINKAGE, 'budget-exhausted',
                      'expanded={}'.format(result.expanded))
    else:
        holder.append(result)
        check = Check('no-linkage', VERDICT_FAIL, CLAIM_NO_LINKAGE, 'linkage-found',
                      'paths={}'.format([list(p) for p in result.paths]))
    check.cost_ms = int((time.time() - start_time) * 1000)
    logger.info('Check {} -> {} ({}ms)'.format(check.name, check.verdict, check.cost_ms))
    return check


def verify_counterexample(digraph, instance, k, m, budget=DEFAULT_BUDGET, variant=Variant.CONSTRUCTION,
                          layout=None):
    """
    反例的验证：(a) 最小半度 >= floor(m/2)，(b) 连通度 >= 2k，(c) 指定实例不存在连接，
    另外逐条弧审计构造规则。三项检查在线程池中并发执行
    :return: VerificationReport
    """
    check_parameters(k, m)
    if layout is None:
        _, _, layout = build_counterexample(k, m, variant)
    holder = []
    with ThreadPoolExecutor(max_workers=3, thread_name_prefix='verify') as pool:
        futures = [
            pool.submit(_check_semidegree, digraph, k, m),
            pool.submit(_check_connectivity, digraph, k, m),
            pool.submit(_check_no_linkage, digraph, instance, budget, holder),
        ]
        checks = [future.result() for future in futures]
    audit = audit_construction(digraph, layout)
    checks.append(Check('construction', VERDICT_PASS if audit.ok else VERDICT_FAIL, CLAIM_CONSTRUCTION,
                        len(audit.deviations), 'missing={} digons={}'.format(len(audit.missing),
                                                                          len(audit.digons))))
    if not audit.ok:
        logger.warning('Construction audit flagged {} arcs'.format(len(audit.deviations)))
    return VerificationReport(k, m, layout.variant, checks, audit, holder[0] if holder else None)


def verify_both_variants(k, m, budget=DEFAULT_BUDGET):
    """
    两种排除方式各生成一次并验证
    :return: {Variant: VerificationReport}
    """
    reports = {}
    for variant in Variant:
        digraph, instance, layout = build_counterexample(k, m, variant)
        reports[variant] = verify_counterexample(digraph, instance, k, m, budget, variant, layout)
    return reports


@dataclass(frozen=True)
class PropertyResult(object):
    holds: bool
    detail: str


def check_property_one(k, m, budget=DEFAULT_BUDGET):
    """
    在 D1 中，对每个满足 pi(1)=1 的排列，都不存在 k 条不交的 (x'_{pi(i)}, y_i)-路
    """
    d1, layout = build_D1(k, m)
    for rest in itertools.permutations(range(1, k)):
        pi = (0,) + rest
        instance = LinkageInstance.of([layout.x_prime[p] for p in pi], layout.y)
        result = find_linkage_exact(d1, instance, budget)
        if isinstance(result, BudgetExhausted):
            return PropertyResult(False, 'inconclusive for pi={}'.format(pi))
        if not isinstance(result, Infeasible):
            return PropertyResult(False, 'linkage for pi={}: {}'.format(pi, [list(p) for p in result.paths]))
    return PropertyResult(True, 'no linkage for any pi with pi(1)=1')


def entry_witness(digraph, sequence, predecessor, removed=(), last_only=False):
    """
    检查从 sequence 之外出发、避开 removed、到达 sequence 中某点的所有路：
    它们都必须经 predecessor 进入 sequence[0]，再沿 sequence 逐点前进。
    对每段 sequence[t..j]，删去它之后从外部点做可达性搜索；
    若 sequence[t] 的其他入邻居可达，就能拼出一条违反的路
    :param predecessor: 唯一允许的进入点
    :param last_only: 只检查以 sequence[-1] 为终点的路
    :return: 违反时返回 (u, sequence[t], sequence[j])，u->sequence[t] 是走错的那条弧；否则 None
    """
    adj = digraph.adj
    sequence = [int(v) for v in sequence]
    region = np.ones(digraph.n, dtype=bool)
    region[list(removed)] = False
    region[sequence] = False
    starts = np.flatnonzero(region)
    ends = [len(sequence) - 1] if last_only else range(len(sequence))
    for j in ends:
        for t in range(j + 1):
            allowed = region.copy()
            allowed[sequence[:t]] = True
            allowed[sequence[j + 1:]] = True
            seen = reachable(adj, starts, allowed) & allowed
            expected = sequence[t - 1] if t > 0 else predecessor
            for u in np.flatnonzero(adj[:, sequence[t]] & seen).tolist():
                if u != expected:
                    return u, sequence[t], sequence[j]
    return None


def check_property_two(k, m):
    """
    (i) 从 P^2 后半段之外到后半段中任一点的路，必须经过 p^2_h 并沿 P^2 前进；
    (ii) 避开 P^2 后半段、从 P^1 之外到 p^1_m 的路，必须用弧 p^k_1 p^1_1 并沿 P^1 前进。
    两条都在 D2 上对所有路做穷举的可达性检查
    """
    d2, layout = build_D2(k, m)
    second = layout.second_half()
    found = entry_witness(d2, second, layout.p(2, layout.h))
    if found is not None:
        return PropertyResult(False, '(i) arc {}->{} enters the second half of P^2 on a path to {}'.format(*found))
    found = entry_witness(d2, layout.blocks[0], layout.p(k, 1), removed=second, last_only=True)
    if found is not None:
        return PropertyResult(False, '(ii) arc {}->{} enters P^1 on a path to {}'.format(*found))
    return PropertyResult(True, 'both entry conditions hold')
