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
from dataclasses import dataclass, field, fields, asdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from linkage.common.constants import LOGGER_NAME, DEFAULT_BUDGET, DEFAULT_ELL, SPLITS_FACTOR, QUARTER_RATIO, \
    HALF_RATIO, ANCHOR_PRECONDITION, ANCHOR_DEGREE, ANCHOR_BLOWUP, ANCHOR_H_I, ANCHOR_O_SELECTION, \
    ANCHOR_MENGER, ANCHOR_REROUTE, ANCHOR_RELEASE, ANCHOR_CASE1, ANCHOR_WALK, ANCHOR_Q_FREE, ANCHOR_CASE2, \
    ANCHOR_ASSEMBLE
from linkage.common.exceptions import LinkerFailure, InternalLinkerError, ParseError, BlowupError, RerouteError
from linkage.connectivity import PathSystem, MaxCutWitness, menger_paths, vertex_connectivity
from linkage.digraph import Digraph, is_semicomplete, hamiltonian_path
from linkage.oracle import LinkageInstance
from linkage.reroute import free_subdivision, RerouteVariant
from linkage.subdivision import Subdivision, SubdivisionFound, SplitParams, find_subdivision, \
    split_to_tt_blowup, hall_matching, HallViolation

logger = logging.getLogger(LOGGER_NAME)

CASE_V_PRIME = 1
CASE_S_L = 2


@dataclass
class LinkerParams(object):
    """
    连接算法的全部常数
    :param s: 细分的分支集合大小
    :param w_size: 每个 W_i 的大小
    :param u_block: 分裂过程中每个块 U_j 的大小
    :param v_part: 每个 V_j 的最小规模
    :param freed_min: 改道后 S'_i 的最小规模
    :param fan_in: (Q*2) 中 x+_{i'} 在 S_i 中入邻居个数的门槛
    :param fan_free: o_i 在 S'_l 中入邻居、V''_k 的点在 S'_l 中出邻居的最少个数
    :param hop_direct: 直接跳到下一个 S'_{i+1} 需要的出邻居个数
    :param hop_min: 经细分路中转的点在 S'_{i+1} 中需要的出邻居个数
    """
    s: int
    w_size: int
    u_block: int
    v_part: int
    freed_min: int
    ell: int = DEFAULT_ELL
    fan_in: int = 1
    fan_free: int = 1
    hop_direct: int = 1
    hop_min: int = 1
    quarter: Fraction = QUARTER_RATIO
    half: Fraction = HALF_RATIO
    splits_factor: int = SPLITS_FACTOR
    window: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    check_connectivity: bool = True

    def __post_init__(self):
        self.quarter = Fraction(self.quarter)
        self.half = Fraction(self.half)
        for name in ('s', 'w_size', 'u_block', 'v_part', 'freed_min', 'fan_in', 'fan_free', 'hop_direct',
                     'hop_min', 'splits_factor'):
            if getattr(self, name) < 1:
                raise ParseError('Linker parameter {} must be positive, got {}'.format(name, getattr(self, name)))
        if self.ell < 0:
            raise ParseError('Linker parameter ell must be non-negative, got {}'.format(self.ell))

    @classmethod
    def paper(cls, k):
        """
        原始证明中的常数，只适合很大的输入
        """
        return cls(
            s=20 * k,
            w_size=(10 ** 7 * k ** 4 - 2 * k) // k,
            u_block=10 ** 6 * k ** 3,
            v_part=16 * (k + 1),
            freed_min=17 * k,
            fan_in=10 * k,
            fan_free=7 * k,
            hop_direct=5 * k,
            hop_min=2 * k,
        )

    @classmethod
    def scaled(cls, k, n=None, **overrides):
        """
        桌面规模的参数。给出n时 W_i 取尽可能大；w_size 可以直接给出，其余常数随之推出
        """
        cls._check_names(overrides)
        w_size = overrides.pop('w_size', None)
        if w_size is None:
            w_size = 8 * k if n is None else max(1, (n - 2 * k) // k)
        s = max(2 * k, min(2 * k + 2, w_size))
        values = dict(
            s=s,
            w_size=w_size,
            u_block=max(s, w_size // 2),
            v_part=2,
            freed_min=max(1, s - 2 * (k + 1)),
            fan_in=k + 1,
            fan_free=1,
            hop_direct=2,
            hop_min=1,
        )
        values.update(overrides)
        return cls(**values)

    @classmethod
    def fitted(cls, digraph, x, y, **overrides):
        """
        按输入图取参数：w_size 取能为每个 x_i 划出互不相交的 W_i 的最大值
        """
        cls._check_names(overrides)
        instance = LinkageInstance.of(x, y)
        instance.validate(digraph.n)
        if 'w_size' not in overrides:
            terminals = set(instance.terminals())
            size = min(len(set(digraph.out_neighbours(v)) - terminals) for v in instance.x)
            size = min(size, (digraph.n - 2 * instance.k) // instance.k)
            while size > 1 and carve_out_neighbourhoods(digraph, instance, size)[0] is None:
                size -= 1
            overrides['w_size'] = max(1, size)
            logger.debug('Fitted w_size={} for n={} k={}'.format(overrides['w_size'], digraph.n, instance.k))
        return cls.scaled(instance.k, digraph.n, **overrides)

    @classmethod
    def _check_names(cls, value):
        names = set(f.name for f in fields(cls))
        unknown = sorted(set(value) - names)
        if unknown:
            raise ParseError('Unknown linker parameters: {}'.format(unknown))

    @classmethod
    def from_dict(cls, value, k=None, n=None):
        """
        参数文件中的字段名与本类字段名一致；缺省字段取 scaled(k, n) 的值
        """
        cls._check_names(value)
        if k is None:
            return cls(**value)
        return cls.scaled(k, n, **value)

    def to_dict(self):
        value = asdict(self)
        value['quarter'] = str(self.quarter)
        value['half'] = str(self.half)
        return value

    def split_params(self):
        return SplitParams(s=self.s, part_min=self.v_part, ell=self.ell, splits_factor=self.splits_factor,
                           window=self.window)


@dataclass
class Configuration(object):
    """
    X 的出邻域中的结构。order_i 是 I 沿 H_I 哈密顿路的顺序，order_j 是 J 沿传递竞赛图膨胀的顺序；
    l = order_i[-1]，k = order_j[-1]
    """
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    w: Dict[int, Tuple[int, ...]]
    f: Dict[int, Subdivision] = field(default_factory=dict)
    v: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    order_i: List[int] = field(default_factory=list)
    order_j: List[int] = field(default_factory=list)
    h_i: Optional[Digraph] = None
    case: Optional[int] = None
    sources: Tuple[int, ...] = ()
    special: Optional[int] = None
    v_prime_k: Tuple[int, ...] = ()
    v_double_k: Tuple[int, ...] = ()
    s_prime: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    q_hat: Optional[PathSystem] = None
    guards: List[str] = field(default_factory=list)

    @property
    def k(self):
        return len(self.x)

    @property
    def l(self):
        return self.order_i[-1] if self.order_i else None

    @property
    def last_j(self):
        return self.order_j[-1] if self.order_j else None

    def s_of(self, i):
        return self.f[i].branch_set

    def vertices_of_f(self):
        found = set()
        for subdivision in self.f.values():
            found |= subdivision.vertices()
        return found

    def to_dict(self):
        return {
            'I': list(self.order_i),
            'J': list(self.order_j),
            'W': {str(i): list(w) for i, w in sorted(self.w.items())},
            'S': {str(i): list(self.s_of(i)) for i in self.order_i},
            'V': {str(j): list(self.v[j]) for j in self.order_j},
            'case': self.case,
            'special': self.special,
            "V'_k": list(self.v_prime_k),
            "V''_k": list(self.v_double_k),
            "S'": {str(i): list(s) for i, s in sorted(self.s_prime.items())},
            'guards': list(self.guards),
        }


@dataclass(frozen=True)
class Selection(object):
    sources: Tuple[int, ...]
    special: Optional[int]
    case: int


def _fail(stage, anchor, detail, params):
    logger.info('Linker stopped at {}: {}'.format(stage, detail))
    return LinkerFailure(stage, anchor, detail, params.to_dict() if params is not None else None)


def _check_preconditions(digraph, instance, params):
    instance.validate(digraph.n)
    if not is_semicomplete(digraph):
        raise _fail('precondition', ANCHOR_PRECONDITION, 'input is not semicomplete', params)
    if params.check_connectivity:
        wanted = 2 * instance.k + 1
        if digraph.n <= wanted:
            raise _fail('precondition', ANCHOR_PRECONDITION, 'n={} too small for kappa >= {}'.format(
                digraph.n, wanted), params)
        kappa = vertex_connectivity(digraph, limit=wanted)
        if kappa < wanted:
            raise _fail('precondition', ANCHOR_PRECONDITION, 'kappa={} below {}'.format(kappa, wanted), params)


def carve_out_neighbourhoods(digraph, instance, size):
    """
    依次给每个 x_i 划出 size 个互不相交的出邻居，先取后面的 x_j 够不到的点
    :return: (W, None)，或者 (None, (i, x_i 剩下的可用个数))
    """
    terminals = set(instance.terminals())
    outs = [set(digraph.out_neighbours(x)) - terminals for x in instance.x]
    taken = set()
    w = {}
    for i in range(instance.k):
        later = outs[i + 1:]
        candidates = sorted((v for v in outs[i] if v not in taken),
                            key=lambda v: (sum(1 for other in later if v in other), v))
        if len(candidates) < size:
            return None, (i, len(candidates))
        w[i] = tuple(sorted(candidates[:size]))
        taken.update(w[i])
    return w, None


def _carve(digraph, instance, params):
    w, short = carve_out_neighbourhoods(digraph, instance, params.w_size)
    if w is None:
        i, available = short
        raise _fail('degree', ANCHOR_DEGREE, 'x_{} has {} free out-neighbours, needs {}'.format(
            i, available, params.w_size), params)
    return w


def _grow_index_set(digraph, cfg, params, blocked):
    """
    在每个剩下的 W_i 上尝试找细分，直到不再变化
    """
    changed = True
    while changed:
        changed = False
        for i in range(cfg.k):
            if i in cfg.f:
                continue
            used = cfg.vertices_of_f()
            host = [v for v in cfg.w[i] if v not in used]
            if len(host) < params.s:
                continue
            allowed = set(range(digraph.n)) - blocked - used
            outcome = find_subdivision(digraph, host, params.s, params.ell, allowed)
            if isinstance(outcome, Subdivision):
                cfg.f[i] = outcome
                changed = True
                logger.debug('Subdivision on W_{} with branch set {}'.format(i, list(outcome.branch_set)))


def _blowup(digraph, cfg, params):
    """
    J 中各块上的分裂过程；分裂中找到的完全细分把对应下标移进 I 后重做
    """
    while True:
        rest = [j for j in range(cfg.k) if j not in cfg.f]
        if not rest:
            return
        used = cfg.vertices_of_f()
        blocks = []
        for j in rest:
            remaining = [v for v in cfg.w[j] if v not in used]
            if len(remaining) < params.u_block:
                raise _fail('blowup', ANCHOR_BLOWUP, "W'_{} has {} vertices, needs {}".format(
                    j, len(remaining), params.u_block), params)
            blocks.append(remaining[:params.u_block])
        union = sorted(v for block in blocks for v in block)
        host = digraph.induced(union)
        local = {v: i for i, v in enumerate(union)}
        try:
            outcome = split_to_tt_blowup(host, [[local[v] for v in block] for block in blocks],
                                         params.split_params())
        except BlowupError as e:
            raise _fail('blowup', ANCHOR_BLOWUP, '{} ({})'.format(e.detail, e.stage), params)
        if isinstance(outcome, SubdivisionFound):
            found = outcome.subdivision
            mapped = Subdivision(tuple(union[v] for v in found.branch_set),
                                 {(union[a], union[b]): tuple(union[v] for v in path)
                                  for (a, b), path in found.paths.items()}, found.ell)
            cfg.f[rest[outcome.block]] = mapped
            logger.info('Block of x_{} promoted to I by a subdivision found while splitting'.format(
                rest[outcome.block]))
            continue
        blowup, _ = outcome
        cfg.order_j = [rest[b] for b in blowup.block_map]
        cfg.v = {rest[b]: tuple(union[v] for v in part) for b, part in zip(blowup.block_map, blowup.parts)}
        return


def _auxiliary(digraph, cfg, params):
    """
    H_I：i1 -> i2 当且仅当 S_i1 中至少 |S_i1|/4 个点各自在 S_i2 中至少有 |S_i2|/4 个出邻居
    """
    members = sorted(cfg.f)
    n = len(members)
    matrix = np.zeros((n, n), dtype=bool)
    adj = digraph.adj
    for a, i1 in enumerate(members):
        for b, i2 in enumerate(members):
            if a == b:
                continue
            s1, s2 = list(cfg.s_of(i1)), list(cfg.s_of(i2))
            strong = adj[np.ix_(s1, s2)].sum(axis=1) >= float(params.quarter * len(s2))
            matrix[a, b] = int(strong.sum()) >= params.quarter * len(s1)
    h_i = Digraph(matrix)
    if n > 1 and not is_semicomplete(h_i):
        raise _fail('H_I', ANCHOR_H_I, 'auxiliary digraph is not semicomplete', params)
    cfg.h_i = h_i
    cfg.order_i = [members[a] for a in hamiltonian_path(h_i)] if n else []


def build_configuration(digraph, instance, params):
    """
    划分 W_i，尽量多地在 W_i 上找到细分（下标集 I），其余块做分裂得到传递竞赛图的膨胀，
    再沿 H_I 的哈密顿路给 I 排序
    :return: Configuration
    """
    w = _carve(digraph, instance, params)
    cfg = Configuration(instance.x, instance.y, w)
    blocked = set(instance.terminals())
    _grow_index_set(digraph, cfg, params, blocked)
    _blowup(digraph, cfg, params)
    _auxiliary(digraph, cfg, params)
    logger.info('Configuration I={} J={}'.format(cfg.order_i, cfg.order_j))
    return cfg


def _max_out_within(digraph, vertices, exclude=()):
    candidates = [v for v in vertices if v not in exclude]
    if not candidates:
        return None
    return max(candidates, key=lambda v: (digraph.out_degree(v, within=vertices), -v))


def select_O_and_special(digraph, cfg, params):
    """
    按规则 (1)/(2) 选出 O 所在的集合与特殊点 y_{k+1}
    :return: Selection(sources, special, case)
    """
    k = cfg.k
    if not cfg.order_j:
        sources = tuple(cfg.s_of(cfg.l))
        selection = Selection(sources, None, CASE_S_L)
    else:
        v_k = cfg.v[cfg.last_j]
        if cfg.order_i:
            s_l = list(cfg.s_of(cfg.l))
            v_prime = tuple(v for v in v_k if digraph.out_degree(v, within=s_l) >= params.half * len(s_l))
        else:
            v_prime = tuple(v_k)
        cfg.v_prime_k = v_prime
        cfg.v_double_k = tuple(v for v in v_k if v not in set(v_prime))
        first = cfg.v[cfg.order_j[0]]
        if not cfg.order_i or len(v_prime) >= params.half * len(v_k):
            special = _max_out_within(digraph, first, exclude=v_prime if len(cfg.order_j) == 1 else ())
            if special is None:
                special = _max_out_within(digraph, first)
            sources = tuple(v for v in v_prime if v != special)
            selection = Selection(sources, special, CASE_V_PRIME)
        else:
            if len(cfg.order_j) == 1:
                special = _max_out_within(digraph, cfg.v_double_k)
            else:
                special = _max_out_within(digraph, first)
            selection = Selection(tuple(cfg.s_of(cfg.l)), special, CASE_S_L)
    wanted = k + (1 if selection.special is not None else 0)
    if len(selection.sources) < wanted:
        raise _fail('O-selection', ANCHOR_O_SELECTION, 'source set of size {} for {} paths'.format(
            len(selection.sources), wanted), params)
    cfg.case, cfg.sources, cfg.special = selection.case, selection.sources, selection.special
    logger.info('Case {} with {} candidate origins, special vertex {}'.format(
        selection.case, len(selection.sources), selection.special))
    return selection


def find_initial_paths(digraph, cfg, params):
    """
    避开 X 从 O 所在集合到 Y 与 y_{k+1} 的不交路；每条路只有起点在该集合中。
    先试着同时避开各个细分（起点除外），找不到时只避开 X。
    第 i 条路以 y_i 为终点，最后一条以特殊点为终点
    """
    targets = list(cfg.y) + ([cfg.special] if cfg.special is not None else [])
    avoid = cfg.vertices_of_f() - set(cfg.sources) - set(targets)
    result = menger_paths(digraph, cfg.sources, targets, len(targets), forbidden=set(cfg.x) | avoid)
    if isinstance(result, MaxCutWitness):
        logger.debug('No {} paths around the subdivisions, allowing them'.format(len(targets)))
        result = menger_paths(digraph, cfg.sources, targets, len(targets), forbidden=cfg.x)
    if isinstance(result, MaxCutWitness):
        raise _fail('menger', ANCHOR_MENGER, 'only {} disjoint paths, separator {}'.format(
            result.flow, list(result.separator)), params)
    by_target = {path[-1]: path for path in result}
    return PathSystem.of(digraph, [by_target[t] for t in targets])


def _refresh_s_prime(cfg, system, candidates):
    """
    保留使得所有 P_uv 都避开路组的分支点，贪心删除冲突最多的点
    """
    used = system.vertices()
    for i, members in candidates.items():
        members = set(members)
        subdivision = cfg.f[i]
        while True:
            conflicts = {}
            for u in members:
                for v in members:
                    if u != v and set(subdivision.path(u, v)) & used:
                        conflicts[u] = conflicts.get(u, 0) + 1
                        conflicts[v] = conflicts.get(v, 0) + 1
            if not conflicts:
                break
            worst = max(sorted(conflicts), key=lambda u: conflicts[u])
            members.discard(worst)
        cfg.s_prime[i] = tuple(sorted(members))


def _reroute(digraph, cfg, system, params):
    targets = system.terminals()
    candidates = {}
    moreover = cfg.case == CASE_S_L and cfg.l is not None
    for i in cfg.order_i:
        if moreover and i == cfg.l:
            continue
        try:
            result = free_subdivision(digraph, cfg.f[i], system, system.origins(), targets, params.freed_min)
        except RerouteError as e:
            raise _fail('reroute', ANCHOR_REROUTE, 'F_{}: {} ({})'.format(i, e.detail, e.stage), params)
        system = result.q_hat
        candidates[i] = result.s_prime
    if moreover:
        try:
            result = free_subdivision(digraph, cfg.f[cfg.l], system, system.origins(), targets, params.freed_min,
                                      RerouteVariant.MOREOVER)
        except RerouteError as e:
            raise _fail('reroute', ANCHOR_REROUTE, 'F_{}: {} ({})'.format(cfg.l, e.detail, e.stage), params)
        system = result.q_hat
    _refresh_s_prime(cfg, system, candidates)
    if moreover:
        cfg.s_prime[cfg.l] = result.s_prime
    for i in cfg.order_i:
        if len(cfg.s_prime[i]) < params.freed_min:
            raise _fail('reroute', ANCHOR_REROUTE, "|S'_{}|={} below {}".format(
                i, len(cfg.s_prime[i]), params.freed_min), params)
    return system


def _release_target(cfg, position):
    j = cfg.order_j[position]
    if position == len(cfg.order_j) - 1:
        return set(cfg.v_double_k)
    return set(cfg.v[j])


def _release(digraph, cfg, paths, params):
    """
    依次释放 V_{l+1}, ..., V_k 中的点：截断相交最多的路并把特殊路接到它的后半段
    """
    y_set = set(cfg.y)
    half = params.half * len(cfg.v[cfg.last_j])
    for position, j in enumerate(cfg.order_j):
        last = position == len(cfg.order_j) - 1
        if last and len(cfg.v_double_k) <= half:
            cfg.guards.append("t=k with |V''_k| <= |V_k|/2")
            continue
        target = _release_target(cfg, position)
        stage = 'release({})'.format(j)
        while True:
            used = set(v for path in paths for v in path)
            if len(target - used) >= 2:
                break
            special_index = next(i for i, path in enumerate(paths) if path[-1] not in y_set)
            y_special = paths[special_index][-1]
            if position == 0:
                region = set(v for v in digraph.out_neighbours(y_special) if v in target)
            else:
                region = target
            counts = [sum(1 for v in path if v in region) for path in paths]
            chosen = max(range(len(paths)), key=lambda i: (counts[i], -i))
            hits = [p for p, v in enumerate(paths[chosen]) if v in region]
            if len(hits) < 4:
                raise _fail(stage, ANCHOR_RELEASE, 'best path meets the region in {} vertices'.format(
                    len(hits)), params)
            path = paths[chosen]
            w1, w4 = hits[0], hits[3]
            if chosen == special_index:
                paths[chosen] = path[:w1 + 1]
            else:
                if not digraph.has_arc(y_special, path[w4]):
                    raise _fail(stage, ANCHOR_RELEASE, 'no arc from special vertex {} to {}'.format(
                        y_special, path[w4]), params)
                paths[special_index] = paths[special_index] + path[w4:]
                paths[chosen] = path[:w1 + 1]
            cfg.guards.append('release V_{} at w1={}'.format(j, path[w1]))
            logger.debug('Released vertices of V_{} along path {}, new special vertex {}'.format(
                j, chosen, path[w1]))
    return paths


def free_and_release(digraph, cfg, system, params):
    """
    对每个 F_i 改道得到 Q^ 与 S'_i，再释放 V_j 中的点得到 Q*；
    Q* 的第 i 条路以 y_i 为终点，最后一条（若有）为特殊路
    """
    q_hat = _reroute(digraph, cfg, system, params)
    cfg.q_hat = q_hat
    paths = [tuple(path) for path in q_hat]
    if cfg.order_j:
        paths = _release(digraph, cfg, paths, params)
    y_index = {y: i for i, y in enumerate(cfg.y)}
    ordered = sorted(paths, key=lambda path: y_index.get(path[-1], len(cfg.y)))
    q_star = PathSystem.of(digraph, ordered)
    if not q_star.vertices() <= q_hat.vertices():
        raise InternalLinkerError('V(Q*) is not inside V(Q^)')
    problems = q_star.problems(None, list(cfg.y) + [p[-1] for p in ordered[len(cfg.y):]])
    if problems:
        raise InternalLinkerError('Q* is not a path system: {}'.format(problems[0]))
    used = q_star.vertices()
    for j in cfg.order_j[:-1]:
        if len(set(cfg.v[j]) - used) < 2:
            raise _fail('release({})'.format(j), ANCHOR_RELEASE, 'V_{} keeps fewer than 2 free vertices'.format(j),
                        params)
    cfg.special = ordered[-1][-1] if len(ordered) > len(cfg.y) else None
    return q_star


class _Router(object):
    """
    第三步的顶点占用记录
    """

    def __init__(self, digraph, cfg, q_star, params):
        self.digraph = digraph
        self.cfg = cfg
        self.params = params
        self.used = set(q_star.vertices()) | set(cfg.x) | set(cfg.y)

    def free(self, v):
        return v not in self.used

    def take(self, vertices):
        for v in vertices:
            if v in self.used:
                raise _fail('assemble', ANCHOR_ASSEMBLE, 'vertex {} used twice'.format(v), self.params)
        self.used.update(vertices)

    def pick(self, candidates):
        for v in sorted(candidates):
            if self.free(v):
                return v
        return None

    def inner_free(self, path):
        return all(self.free(v) for v in path[1:-1])

    def walk(self, u, position):
        """
        从 S'_{order_i[position]} 中的 u 走到 S'_l，每一步或者直接跳到下一个 S'，
        或者沿当前细分路走到一个在下一个 S' 中有足够出邻居的分支点再跳
        :return: u 之后的顶点列表
        """
        cfg, adj = self.cfg, self.digraph.adj
        steps = []
        while position < len(cfg.order_i) - 1:
            current, following = cfg.order_i[position], cfg.order_i[position + 1]
            s_next = list(cfg.s_of(following))
            s_prime_next = [v for v in cfg.s_prime[following] if self.free(v)]
            direct = [v for v in s_prime_next if adj[u, v]]
            if int(adj[u, s_next].sum()) >= self.params.hop_direct and direct:
                self.take([direct[0]])
                steps.append(direct[0])
                u = direct[0]
            else:
                hop = None
                for w in cfg.s_prime[current]:
                    if w == u or not self.free(w):
                        continue
                    outs = [v for v in s_prime_next if adj[w, v]]
                    route = cfg.f[current].path(u, w)
                    if len(outs) >= self.params.hop_min and self.inner_free(route):
                        hop = route, outs[0]
                        break
                if hop is None:
                    raise _fail('walk', ANCHOR_WALK, 'walk from {} stuck before F_{}'.format(u, following),
                                self.params)
                route, target = hop
                self.take(list(route[1:]) + [target])
                steps.extend(route[1:])
                steps.append(target)
                u = target
            position += 1
        return steps

    def link_in_l(self, start, end):
        """
        用 F_l 的细分路从 start 走到 end，end 不计入占用
        """
        if start == end:
            return [start]
        route = self.cfg.f[self.cfg.l].path(start, end)
        if not self.inner_free(route):
            raise _fail('assemble', ANCHOR_ASSEMBLE, 'subdivision path {}->{} of F_l is occupied'.format(
                start, end), self.params)
        self.take(route[1:-1])
        return list(route)


def _case_one(digraph, cfg, q_star, params, router):
    k = cfg.k
    adj = digraph.adj
    origins = [q_star[i][0] for i in range(k)]
    result = {}
    order_pos = {i: p for p, i in enumerate(cfg.order_i)}
    for i in cfg.order_j:
        o = origins[i]
        candidates = [v for v in cfg.v[i] if router.free(v) and adj[v, o] and adj[cfg.x[i], v]]
        if adj[cfg.x[i], o] and not candidates:
            result[i] = [cfg.x[i], o]
            continue
        if not candidates:
            raise _fail('case1', ANCHOR_CASE1, 'no free vertex of V_{} reaches o_{}'.format(i, i), params)
        router.take([candidates[0]])
        result[i] = [cfg.x[i], candidates[0], o]
    if not cfg.order_i:
        return result
    s_prime_l = [v for v in cfg.s_prime[cfg.l] if router.free(v)]
    members = list(cfg.order_i)
    edges = []
    for a, i in enumerate(members):
        ins = [b for b, z in enumerate(s_prime_l) if adj[z, origins[i]]]
        if len(ins) < params.fan_free:
            raise _fail('case1', ANCHOR_CASE1, "o_{} has {} in-neighbours in S'_l".format(i, len(ins)), params)
        edges.extend((a, b) for b in ins)
    matching = hall_matching(len(members), len(s_prime_l), edges)
    if isinstance(matching, HallViolation):
        raise _fail('case1', ANCHOR_CASE1, 'no matching Z -> O for {}'.format(
            [members[a] for a in matching.left]), params)
    z = {members[a]: s_prime_l[b] for a, b in matching.items()}
    router.take(list(z.values()))
    for i in members:
        x_plus = router.pick(v for v in cfg.s_prime[i] if adj[cfg.x[i], v])
        if x_plus is None:
            raise _fail('case1', ANCHOR_CASE1, "no free out-neighbour of x_{} in S'_{}".format(i, i), params)
        router.take([x_plus])
        result[i] = [cfg.x[i], x_plus]
    for i in members:
        steps = router.walk(result[i][-1], order_pos[i])
        result[i].extend(steps)
        tail = router.link_in_l(result[i][-1], z[i])
        result[i].extend(tail[1:])
        result[i].append(origins[i])
    return result


def _free_count(router, vertices):
    return sum(1 for v in vertices if router.free(v))


def _case_two(digraph, cfg, q_star, params, router):
    """
    O 在 S_l 中：先做 (Q*1)、(Q*2)，再把剩下的 x_i 经逐块的走法接到 S'_l，最后沿 F_l 接到 o_i
    """
    k = cfg.k
    adj = digraph.adj
    paths = {i: list(q_star[i]) for i in range(k)}
    complete = {}
    v_double = set(cfg.v_double_k)
    j_rem = list(cfg.order_j)
    j_unuse = {cfg.last_j} if cfg.order_j else set()
    i_rem = list(cfg.order_i)
    x_new = {}
    prefix = {}

    def release(i, new_path):
        old = set(paths[i])
        router.used -= old - set(new_path)
        router.used.update(new_path)
        paths[i] = new_path
        complete[i] = new_path

    # (Q*1)
    while _free_count(router, v_double) < len(j_rem):
        hit = None
        for i in j_rem:
            positions = [p for p, v in enumerate(paths[i]) if v in v_double]
            if positions:
                hit = i, positions[-1]
                break
        if hit is None:
            break
        i, p = hit
        v = paths[i][p]
        if i == cfg.last_j:
            head = [cfg.x[i]]
        else:
            x_plus = router.pick(w for w in cfg.v[i] if adj[w, v] and adj[cfg.x[i], w])
            if x_plus is None:
                raise _fail('Q*1', ANCHOR_CASE2, 'no free vertex of V_{} before {}'.format(i, v), params)
            head = [cfg.x[i], x_plus]
        release(i, head + paths[i][p:])
        j_rem.remove(i)
        cfg.guards.append('(Q*1) on path {}'.format(i))

    # (Q*2)
    if _free_count(router, v_double) < len(j_rem):
        while [j for j in j_rem if j not in j_unuse] and i_rem:
            before_free, before_rem = _free_count(router, v_double), len(j_rem)
            i = max(i_rem, key=lambda c: (sum(1 for v in paths[c] if v in v_double), -c))
            positions = [p for p, v in enumerate(paths[i]) if v in v_double]
            if not positions:
                raise _fail('Q*2', ANCHOR_CASE2, "no remaining path meets V''_k", params)
            p = positions[-1]
            v = paths[i][p]
            i_prime = min(j for j in j_rem if j not in j_unuse)
            x_plus_prime = router.pick(w for w in cfg.v[i_prime] if adj[w, v])
            if x_plus_prime is None:
                raise _fail('Q*2', ANCHOR_CASE2, 'no free vertex left in V_{}'.format(i_prime), params)
            s_i = list(cfg.s_of(i))
            if int(adj[s_i, x_plus_prime].sum()) >= params.fan_in:
                x_plus = router.pick(w for w in cfg.s_prime[i]
                                     if adj[w, x_plus_prime] and adj[cfg.x[i], w] and w not in x_new.values())
                if x_plus is None:
                    raise _fail('Q*2', ANCHOR_CASE2, "no in-neighbour of {} in S'_{}".format(x_plus_prime, i),
                                params)
                release(i, [cfg.x[i], x_plus, x_plus_prime] + paths[i][p:])
                i_rem.remove(i)
                j_unuse.add(i_prime)
            else:
                x_plus_plus = router.pick(w for w in cfg.s_prime[i]
                                          if adj[x_plus_prime, w] and w not in x_new.values())
                if x_plus_plus is None:
                    raise _fail('Q*2', ANCHOR_CASE2, "no out-neighbour of {} in S'_{}".format(x_plus_prime, i),
                                params)
                router.take([x_plus_prime, x_plus_plus])
                x_new[i_prime] = (x_plus_plus, i)
                prefix[i_prime] = [cfg.x[i_prime], x_plus_prime, x_plus_plus]
                j_rem.remove(i_prime)
            after_free = _free_count(router, v_double)
            if len(j_rem) >= before_rem and after_free < before_free + 2:
                raise _fail('Q*2', ANCHOR_CASE2, "(Q*2) on path {} kept |J_rem|={} and freed {} vertices of "
                                                 "V''_k".format(i, len(j_rem), after_free - before_free), params)
            cfg.guards.append('(Q*2) on path {} with index {}'.format(i, i_prime))

    if _free_count(router, v_double) < len(j_rem):
        raise _fail('Q*-free', ANCHOR_Q_FREE, "{} free vertices in V''_k for |J_rem|={}".format(
            _free_count(router, v_double), len(j_rem)), params)

    s_prime_l = set(cfg.s_prime[cfg.l]) if cfg.l is not None else set()
    for i in j_rem:
        if i == cfg.last_j:
            x_plus = None
        else:
            x_plus = router.pick(w for w in cfg.v[i] if adj[cfg.x[i], w])
            if x_plus is None:
                raise _fail('Q*-free', ANCHOR_Q_FREE, 'no free vertex left in V_{}'.format(i), params)
            router.take([x_plus])
        found = None
        for w in sorted(v_double):
            if not router.free(w) or (x_plus is not None and not adj[x_plus, w]):
                continue
            if x_plus is None and not adj[cfg.x[i], w]:
                continue
            outs = [z for z in s_prime_l if adj[w, z] and router.free(z)]
            if len(outs) >= params.fan_free:
                found = w, min(outs)
                break
        if found is None:
            raise _fail('Q*-free', ANCHOR_Q_FREE, "no free vertex of V''_k reaches S'_l for index {}".format(i),
                        params)
        w, z = found
        router.take([w, z])
        prefix[i] = [cfg.x[i]] + ([x_plus] if x_plus is not None else []) + [w, z]
        x_new[i] = (z, cfg.l)
    for i in i_rem:
        x_plus = router.pick(w for w in cfg.s_prime[i] if adj[cfg.x[i], w])
        if x_plus is None:
            raise _fail('walk', ANCHOR_WALK, "no free out-neighbour of x_{} in S'_{}".format(i, i), params)
        router.take([x_plus])
        prefix[i] = [cfg.x[i], x_plus]
        x_new[i] = (x_plus, i)

    result = dict(complete)
    order_pos = {i: p for p, i in enumerate(cfg.order_i)}
    for i in sorted(x_new):
        start, owner = x_new[i]
        route = prefix[i] + router.walk(start, order_pos[owner])
        origin = paths[i][0]
        tail = router.link_in_l(route[-1], origin)
        result[i] = route + tail[1:]
    return result


def link_back(digraph, cfg, q_star, params):
    """
    第三步：在 V(Q*) 之外把 x_i 接到 o_i
    :return: {i: 路}，路以 o_i 结尾，或者已经是完整的 (x_i, y_i)-路
    """
    router = _Router(digraph, cfg, q_star, params)
    if cfg.case == CASE_V_PRIME:
        return _case_one(digraph, cfg, q_star, params, router)
    return _case_two(digraph, cfg, q_star, params, router)


def link(digraph, x, y, params):
    """
    构造性的连接算法：配置 -> Menger 路组 -> 改道与释放 -> 接回 -> 拼接
    :return: PathSystem，第 i 条路从 x_i 到 y_i
    :raise LinkerFailure: 某一步在当前参数下无法完成
    """
    instance = LinkageInstance.of(x, y)
    _check_preconditions(digraph, instance, params)
    cfg = build_configuration(digraph, instance, params)
    select_O_and_special(digraph, cfg, params)
    system = find_initial_paths(digraph, cfg, params)
    q_star = free_and_release(digraph, cfg, system, params)
    linked = link_back(digraph, cfg, q_star, params)
    paths = []
    for i in range(instance.k):
        path = list(linked[i])
        if path[-1] != instance.y[i]:
            if path[-1] != q_star[i][0]:
                raise InternalLinkerError('path for x_{} ends at {} instead of o_{}'.format(i, path[-1], i))
            path = path + list(q_star[i][1:])
        paths.append(path)
    result = PathSystem.of(digraph, paths)
    problems = result.problems(instance.x, instance.y)
    if problems:
        raise InternalLinkerError('assembled system failed validation: {}'.format(problems[0]))
    logger.info('Linked {} pairs, total length {}'.format(instance.k, sum(len(p) - 1 for p in paths)))
    return result
