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

from linkage.common.constants import LOGGER_NAME, SCHEMA_VERSION

logger = logging.getLogger(LOGGER_NAME)


def encode_digraph(digraph):
    """
    有向图的文本格式：
    第一行 "n a"，之后 a 行 "u v"，按 (u, v) 升序，LF 换行
    :param digraph:
    :return: str
    """
    arcs = digraph.arcs()
    lines = ['{} {}'.format(digraph.n, len(arcs))]
    lines.extend('{} {}'.format(u, v) for u, v in arcs)
    return '\n'.join(lines) + '\n'


def write_digraph(digraph, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(encode_digraph(digraph))
    logger.debug('Wrote digraph n={} to {}'.format(digraph.n, path))


def encode_json(value):
    """
    报告、布局等JSON输出，键排序，保证相同输入得到相同字节
    """
    if isinstance(value, dict) and 'schema' not in value:
        value = dict(value, schema=SCHEMA_VERSION)
    return json.dumps(value, ensure_ascii=False, indent=2, sort_keys=True) + '\n'


def write_json(value, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(encode_json(value))
    logger.debug('Wrote json to {}'.format(path))
