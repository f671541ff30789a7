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

from fractions import Fraction

# 全局日志名称
LOGGER_NAME = 'python-linkage'

# 日志级别环境变量，TRACE会额外输出分裂日志与改道日志
LOG_ENV = 'LINKAGE_LOG'
TRACE_LEVEL = 'TRACE'
DEFAULT_LOG_LEVEL = 'INFO'

# 命令行退出码
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2

# 判定结果
VERDICT_PASS = 'pass'
VERDICT_FAIL = 'fail'
VERDICT_INCONCLUSIVE = 'inconclusive'

# 报告和布局JSON的版本号
SCHEMA_VERSION = 1

# 精确搜索默认的节点扩展上限
DEFAULT_BUDGET = 10 ** 7

# 度数窗口子集：出度、入度下界比例，窗口宽度为 WINDOW_FACTOR * s
DEGREE_RATIO = Fraction(9, 40)
WINDOW_FACTOR = 10

# 细分路径长度上限为 ell + 1
DEFAULT_ELL = 2

# 分裂过程的分组数为 SPLITS_FACTOR * alpha
SPLITS_FACTOR = 5

# H_I 的弧规则：至少四分之一的点各有四分之一的出邻居
QUARTER_RATIO = Fraction(1, 4)

# V'_k 的规则：在 S_l 中至少有一半出邻居
HALF_RATIO = Fraction(1, 2)

# 各项判定对应的论断
CLAIM_SEMIDEGREE = 'semidegree >= floor(m/2)'
CLAIM_CONNECTIVITY = 'kappa(D) >= 2k'
CLAIM_NO_LINKAGE = 'no k disjoint (x_i, y_i)-paths'
CLAIM_CONSTRUCTION = 'every arc follows exactly one construction rule'

# 连接算法各步骤对应的论断
ANCHOR_PRECONDITION = 'D is a (2k+1)-connected semicomplete digraph'
ANCHOR_DEGREE = 'disjoint W_i inside N+(x_i) minus X and Y'
ANCHOR_BLOWUP = 'blow-up TT[V_(l+1), ..., V_k] with V_j inside W\'_j'
ANCHOR_H_I = 'H_I is a semicomplete digraph'
ANCHOR_O_SELECTION = 'O inside V\'_k or S_l'
ANCHOR_MENGER = 'k+1 disjoint paths from O to Y and y_(k+1) avoiding X'
ANCHOR_REROUTE = 'S\'_i with P_uv disjoint from Q^ for u, v in S\'_i'
ANCHOR_RELEASE = 'at least two Q*-free vertices in every V_j'
ANCHOR_CASE1 = 'paths x_i x_i+ o_i and a matching z_i -> o_i from S\'_l'
ANCHOR_WALK = 'disjoint paths from X\' to S\'_l avoiding X and V(Q*)'
ANCHOR_Q_FREE = 'V\'\'_k has at least |J_rem| Q*-free vertices'
ANCHOR_CASE2 = 'operations (Q*1) and (Q*2)'
ANCHOR_ASSEMBLE = 'paths of P avoid V(Q*) except at o_i'
ANCHOR_THEOREM = 'k disjoint (x_i, y_i)-paths'
