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


class LinkageException(RuntimeError):
    pass


class DigraphError(LinkageException):
    """
    构造有向图时的参数错误，例如自环或者顶点越界
    """
    pass


class NotSemicompleteError(DigraphError):
    """
    操作要求输入是半完全有向图
    """
    pass


class ParseError(LinkageException):
    """
    有向图文本格式或者JSON文件解析失败
    """
    pass


class TerminalError(LinkageException):
    """
    端点重复或者越界
    """
    pass


class SetOverlapError(LinkageException):
    """
    X、Y与禁用集合相交
    """
    pass


class CounterexampleError(LinkageException):
    """
    反例构造的参数(k, m)不合法
    """
    pass


class BlowupError(LinkageException):
    """
    分裂过程没有得到传递竞赛图的膨胀
    """

    def __init__(self, stage, detail, blocks=None, splits=None):
        """
        :param stage: 失败的阶段，例如 'hall'、'split'
        :param detail: 说明
        :param blocks: 违反Hall条件的块的下标
        :param splits: 已经完成的分裂日志
        """
        super(BlowupError, self).__init__('blowup failed at {}: {}'.format(stage, detail))
        self.stage = stage
        self.detail = detail
        self.blocks = sorted(blocks) if blocks else []
        self.splits = list(splits) if splits else []

    def to_dict(self):
        return {
            'stage': self.stage,
            'detail': self.detail,
            'blocks': self.blocks,
            'splits': [split.to_dict() for split in self.splits],
        }


class RerouteError(LinkageException):
    """
    改道过程失败，携带已经计算出的中间结果
    """

    def __init__(self, stage, detail, trace=None):
        super(RerouteError, self).__init__('reroute failed at {}: {}'.format(stage, detail))
        self.stage = stage
        self.detail = detail
        self.trace = trace

    def to_dict(self):
        return {
            'stage': self.stage,
            'detail': self.detail,
            'trace': self.trace.to_dict() if self.trace is not None else None,
        }


class LinkerFailure(LinkageException):
    """
    连接算法在某一步无法继续
    """

    def __init__(self, stage, anchor, detail, params=None):
        """
        :param stage: 失败的步骤，例如 'precondition'、'degree'、'blowup'、'O-selection'
        :param anchor: 对应的论断
        :param detail: 说明
        :param params: 运行参数(dict)
        """
        super(LinkerFailure, self).__init__('linker failed at {} ({}): {}'.format(stage, anchor, detail))
        self.stage = stage
        self.anchor = anchor
        self.detail = detail
        self.params = params

    def to_dict(self):
        return {
            'stage': self.stage,
            'anchor': self.anchor,
            'detail': self.detail,
            'params': self.params,
        }


class InternalLinkerError(LinkageException):
    """
    最终拼接出的路径组没有通过校验，不应该发生
    """
    pass
