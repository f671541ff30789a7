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

import json
import logging

import numpy as np

from linkage.common.constants import LOGGER_NAME
from linkage.common.exceptions import ParseError, DigraphError
from linkage.digraph import Digraph

logger = logging.getLogger(LOGGER_NAME)


def _parse_pair(line, line_no):
    fields = line.split()
    if len(fields) != 2:
        raise ParseError('Line {}: expected two integers, got {!r}'.format(line_no, line))
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError('Line {}: expected two integers, got {!r}'.format(line_no, line))


def decode_digraph(text):
    """
    解析有向图文本格式，空行忽略
    :param text: str
    :return: Digraph
    """
    lines = [(no, line) for no, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines:
        raise ParseError('Empty digraph file')
    n, a = _parse_pair(lines[0][1], lines[0][0])
    if n < 0 or a < 0:
        raise ParseError('Negative header values: n={}, a={}'.format(n, a))
    body = lines[1:]
    if len(body) != a:
        raise ParseError('Header announces {} arcs but {} arc lines follow'.format(a, len(body)))
    matrix = np.zeros((n, n), dtype=bool)
    for line_no, line in body:
        u, v = _parse_pair(line, line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError('Line {}: arc ({}, {}) out of range for n={}'.format(line_no, u, v, n))
        if matrix[u, v]:
            raise ParseError('Line {}: duplicate arc ({}, {})'.format(line_no, u, v))
        matrix[u, v] = True
    try:
        return Digraph(matrix)
    except DigraphError as e:
        raise ParseError(str(e))


def read_digraph(path):
    with open(path, 'r', encoding='utf-8') as f:
        digraph = decode_digraph(f.read())
    logger.debug('Read digraph n={} from {}'.format(digraph.n, path))
    return digraph


def read_json(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except ValueError as e:
        raise ParseError('Invalid json in {}: {}'.format(path, e))
