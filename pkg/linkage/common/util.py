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

import hashlib
import logging
import time
from contextlib import contextmanager

from linkage.common.constants import LOGGER_NAME
from linkage.common.exceptions import ParseError

logger = logging.getLogger(LOGGER_NAME)


def parse_int_list(text):
    """
    解析逗号分隔的整数列表，例如 "1,2,3"
    :param text:
    :return: list of int
    """
    if text is None:
        return []
    items = [item.strip() for item in str(text).split(',')]
    try:
        return [int(item) for item in items if item]
    except ValueError:
        raise ParseError('Not a comma separated integer list: {}'.format(text))


def file_digest(path):
    """
    计算文件的sha256摘要
    :param path:
    :return: 十六进制字符串
    """
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(1 << 16), b''):
            digest.update(chunk)
    return digest.hexdigest()


@contextmanager
def timer(timings, name):
    """
    记录一段代码的耗时（毫秒）到timings字典中
    """
    start_time = time.time()
    try:
        yield
    finally:
        cost_time = int((time.time() - start_time) * 1000)
        timings[name] = cost_time
        logger.debug('{} finished, cost={}ms'.format(name, cost_time))
