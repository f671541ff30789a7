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
import os
import tempfile
import unittest

from linkage.codec.decoder import decode_digraph, read_digraph, read_json
from linkage.codec.encoder import encode_digraph, write_digraph, encode_json, write_json
from linkage.common.constants import SCHEMA_VERSION
from linkage.common.exceptions import ParseError
from linkage.common.loggers import init_log
from linkage.common.util import parse_int_list
from linkage.digraph import circulant_tournament, complete_digraph, new_digraph


class TestCodec(unittest.TestCase):
    def setUp(self):
        init_log()

    def test_text_format(self):
        digraph = new_digraph(3, [(2, 0), (0, 1)])
        self.assertEqual('3 2\n0 1\n2 0\n', encode_digraph(digraph))

    def test_byte_identical(self):
        for digraph in (circulant_tournament(9), complete_digraph(5), new_digraph(4, [])):
            text = encode_digraph(digraph)
            parsed = decode_digraph(text)
            self.assertEqual(digraph, parsed)
            self.assertEqual(text, encode_digraph(parsed))

    def test_blank_lines_ignored(self):
        self.assertEqual(new_digraph(2, [(0, 1)]), decode_digraph('\n2 1\n\n0 1\n\n'))

    def test_parse_errors(self):
        bad = [
            '',
            '2 2\n0 1\n',
            '2 1\n0 2\n',
            '2 2\n0 1\n0 1\n',
            '2 1\n0 x\n',
            '2 1\n0 1 1\n',
            '2 1\n1 1\n',
            '-1 0\n',
        ]
        for text in bad:
            with self.assertRaises(ParseError, msg=repr(text)):
                decode_digraph(text)

    def test_files(self):
        digraph = circulant_tournament(7)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'c7.txt')
            write_digraph(digraph, path)
            self.assertEqual(digraph, read_digraph(path))
            with open(path, 'rb') as f:
                self.assertNotIn(b'\r', f.read())

            report = os.path.join(tmp, 'report.json')
            write_json({'b': 1, 'a': [1, 2]}, report)
            value = read_json(report)
            self.assertEqual(SCHEMA_VERSION, value['schema'])
            self.assertEqual([1, 2], value['a'])

            broken = os.path.join(tmp, 'broken.json')
            with open(broken, 'w') as f:
                f.write('{')
            with self.assertRaises(ParseError):
                read_json(broken)

    def test_json_is_stable(self):
        self.assertEqual(encode_json({'b': 1, 'a': 2}), encode_json({'a': 2, 'b': 1}))
        self.assertEqual(['a', 'b', 'schema'], list(json.loads(encode_json({'b': 1, 'a': 2}))))

    def test_util(self):
        self.assertEqual([1, 2, 30], parse_int_list('1, 2,30'))
        self.assertEqual([], parse_int_list(None))
        with self.assertRaises(ParseError):
            parse_int_list('1,a')


if __name__ == '__main__':
    unittest.main()
