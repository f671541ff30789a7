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
import os

import sys

from linkage.common.constants import LOGGER_NAME, LOG_ENV, TRACE_LEVEL, DEFAULT_LOG_LEVEL

_COLOURS = {'ERROR': 31, 'WARNING': 33, 'INFO': 32, TRACE_LEVEL: 35}


class LinkageFormatter(logging.Formatter):
    """
    毫秒级时间戳；TRACE模式下DEBUG记录标成TRACE；只有输出到终端时才着色
    """
    default_msec_format = '%s.%03d'

    def __init__(self, fmt, colour=False, trace=False):
        super(LinkageFormatter, self).__init__(fmt)
        self.colour = colour
        self.trace = trace

    def format(self, record):
        tag = record.levelname
        if self.trace and record.levelno == logging.DEBUG:
            tag = TRACE_LEVEL
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = tag.ljust(7)
        if self.colour:
            record.levelname = '\033[{}m{}\033[0m'.format(_COLOURS.get(tag, 34), record.levelname)
        return super(LinkageFormatter, self).format(record)


def log_level_name():
    """
    从环境变量LINKAGE_LOG中读取日志级别
    :return: 级别名称，TRACE原样返回
    """
    name = os.environ.get(LOG_ENV, DEFAULT_LOG_LEVEL).strip().upper()
    if name == TRACE_LEVEL:
        return name
    if name not in ('DEBUG', 'INFO', 'WARNING', 'ERROR'):
        return DEFAULT_LOG_LEVEL
    return name


def trace_enabled():
    return log_level_name() == TRACE_LEVEL


def init_log(level=None, stream=None):
    """
    初始化日志配置，重复调用不会重复添加handler，只会把它指向新的输出流
    :param level: 日志级别名称，默认读取LINKAGE_LOG
    :param stream: 输出流，默认stdout；命令行把日志写到stderr，stdout只留给报告
    :return:
    """
    name = (level or log_level_name()).upper()
    stream = stream if stream is not None else sys.stdout
    logger = logging.getLogger(LOGGER_NAME)
    handler = next((h for h in logger.handlers if getattr(h, '_linkage', False)), None)
    if handler is None:
        handler = logging.StreamHandler(stream)
        handler._linkage = True
        logger.addHandler(handler)
    elif handler.stream is not stream:
        handler.setStream(stream)
    colour = bool(getattr(stream, 'isatty', lambda: False)())
    handler.setFormatter(LinkageFormatter(
        '%(asctime)s %(levelname)s [%(threadName)s] %(module)s:%(lineno)d: %(message)s',
        colour=colour, trace=name == TRACE_LEVEL))
    logger.setLevel(logging.DEBUG if name == TRACE_LEVEL else getattr(logging, name, logging.INFO))
    return logger
