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

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from linkage.codec.decoder import read_digraph, read_json
from linkage.codec.encoder import write_digraph, write_json, encode_json
from linkage.common.constants import LOGGER_NAME, DEFAULT_BUDGET, EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, \
    VERDICT_PASS, VERDICT_FAIL, VERDICT_INCONCLUSIVE, ANCHOR_THEOREM
from linkage.common.exceptions import LinkageException, ParseError, TerminalError, LinkerFailure
from linkage.common.loggers import init_log
from linkage.common.util import parse_int_list, file_digest, timer
from linkage.connectivity import vertex_connectivity
from linkage.counterexample import Variant, build_counterexample, verify_counterexample, CounterexampleLayout
from linkage.digraph import circulant_tournament, transitive_tournament, backward_path_tournament, \
    random_semicomplete
from linkage.linker import LinkerParams, link
from linkage.oracle import LinkageInstance, Infeasible, BudgetExhausted, find_linkage_exact

logger = logging.getLogger(LOGGER_NAME)

KINDS = ('counterexample', 'circulant', 'transitive', 'backward', 'random-semicomplete')

ANCHOR_KAPPA = 'vertex connectivity kappa(D)'
ANCHOR_GENERATE = 'generated digraph'

_EXIT_BY_VERDICT = {VERDICT_PASS: EXIT_PASS, VERDICT_FAIL: EXIT_FAIL, VERDICT_INCONCLUSIVE: EXIT_INCONCLUSIVE}


@dataclass
class RunReport(object):
    """
    一次命令执行的报告
    """
    command: List[str]
    digest: Optional[str] = None
    verdicts: List[Dict] = field(default_factory=list)
    timings: Dict[str, int] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)
    result: object = None

    def add(self, name, verdict, anchor, value=None, detail=''):
        if verdict not in _EXIT_BY_VERDICT:
            raise ValueError('Unknown verdict {}'.format(verdict))
        self.verdicts.append({'name': name, 'verdict': verdict, 'anchor': anchor, 'value': value,
                              'detail': detail})

    @property
    def overall(self):
        verdicts = [v['verdict'] for v in self.verdicts]
        if VERDICT_FAIL in verdicts:
            return VERDICT_FAIL
        if VERDICT_INCONCLUSIVE in verdicts:
            return VERDICT_INCONCLUSIVE
        return VERDICT_PASS

    @property
    def exit_code(self):
        return _EXIT_BY_VERDICT[self.overall]

    def to_dict(self):
        return {
            'command': list(self.command),
            'digest': self.digest,
            'overall': self.overall,
            'verdicts': list(self.verdicts),
            'timings': dict(self.timings),
            'outputs': dict(self.outputs),
            'result': self.result,
        }


def _terminals(args):
    instance = LinkageInstance.of(parse_int_list(args.x), parse_int_list(args.y))
    if not instance.x:
        raise ParseError('At least one terminal pair is required')
    return instance


def cmd_generate(args, report):
    kind = args.kind
    if kind == 'counterexample':
        if args.k is None or args.m is None:
            raise ParseError('generate counterexample needs --k and --m')
        digraph, instance, layout = build_counterexample(args.k, args.m, Variant(args.variant))
        layout_path = args.layout or args.out + '.layout.json'
        write_json(layout.to_dict(), layout_path)
        report.outputs['layout'] = layout_path
        report.result = {'instance': instance.to_dict()}
    else:
        if args.n is None:
            raise ParseError('generate {} needs --n'.format(kind))
        if kind == 'circulant':
            digraph = circulant_tournament(args.n)
        elif kind == 'transitive':
            digraph = transitive_tournament(args.n)
        elif kind == 'backward':
            digraph = backward_path_tournament(args.n)
        else:
            digraph = random_semicomplete(args.n, seed=args.seed, digon_p=args.digon_p)
    write_digraph(digraph, args.out)
    report.outputs['digraph'] = args.out
    report.digest = file_digest(args.out)
    report.add('generate', VERDICT_PASS, ANCHOR_GENERATE, {'n': digraph.n, 'arcs': digraph.arc_count()})


def cmd_verify(args, report):
    digraph = read_digraph(args.digraph)
    report.digest = file_digest(args.digraph)
    layout = CounterexampleLayout.from_dict(read_json(args.layout))
    if args.variant is not None and Variant(args.variant) is not layout.variant:
        layout = CounterexampleLayout.from_dict(dict(layout.to_dict(), variant=args.variant))
    if digraph.n != layout.n:
        raise ParseError('Layout describes {} vertices, digraph has {}'.format(layout.n, digraph.n))
    verification = verify_counterexample(digraph, layout.instance(), layout.k, layout.m, args.budget,
                                         layout.variant, layout)
    for check in verification.checks:
        report.add(check.name, check.verdict, check.anchor, check.value, check.detail)
        report.timings[check.name] = check.cost_ms
    report.result = verification.to_dict()


def cmd_kappa(args, report):
    digraph = read_digraph(args.digraph)
    report.digest = file_digest(args.digraph)
    value = vertex_connectivity(digraph, limit=args.limit)
    detail = 'capped at {}'.format(args.limit) if args.limit is not None else 'uncapped'
    report.add('kappa', VERDICT_PASS, ANCHOR_KAPPA, value, detail)
    report.result = {'kappa': value}


def _run_oracle(digraph, instance, budget, report):
    result = find_linkage_exact(digraph, instance, budget)
    if isinstance(result, Infeasible):
        report.add('oracle', VERDICT_FAIL, ANCHOR_THEOREM, 'infeasible', 'expanded={}'.format(result.expanded))
        return {'infeasible': True, 'expanded': result.expanded}
    if isinstance(result, BudgetExhausted):
        report.add('oracle', VERDICT_INCONCLUSIVE, ANCHOR_THEOREM, 'budget-exhausted',
                   'expanded={}'.format(result.expanded))
        return {'budget_exhausted': True, 'expanded': result.expanded}
    report.add('oracle', VERDICT_PASS, ANCHOR_THEOREM, 'linked')
    return result.to_dict()


def cmd_oracle(args, report):
    digraph = read_digraph(args.digraph)
    report.digest = file_digest(args.digraph)
    report.result = _run_oracle(digraph, _terminals(args), args.budget, report)


def cmd_link(args, report):
    digraph = read_digraph(args.digraph)
    report.digest = file_digest(args.digraph)
    instance = _terminals(args)
    instance.validate(digraph.n)
    if args.params:
        value = read_json(args.params)
        value.pop('schema', None)
        params = LinkerParams.fitted(digraph, instance.x, instance.y, **value)
    else:
        params = LinkerParams.fitted(digraph, instance.x, instance.y)
    try:
        system = link(digraph, instance.x, instance.y, params)
    except LinkerFailure as e:
        report.add('link', VERDICT_FAIL, e.anchor, e.stage, e.detail)
        report.result = {'failure': e.to_dict()}
        if args.fallback_oracle:
            logger.info('Linker failed at {}, falling back to the exact oracle'.format(e.stage))
            report.result['oracle'] = _run_oracle(digraph, instance, args.budget, report)
            report.verdicts = [v for v in report.verdicts if v['name'] != 'link']
        return
    report.add('link', VERDICT_PASS, ANCHOR_THEOREM, len(system))
    report.result = system.to_dict()
    if args.out:
        write_json(system.to_dict(), args.out)
        report.outputs['paths'] = args.out


_COMMANDS = {
    'generate': cmd_generate,
    'verify': cmd_verify,
    'kappa': cmd_kappa,
    'oracle': cmd_oracle,
    'link': cmd_link,
}


def build_parser():
    parser = argparse.ArgumentParser(prog='python-linkage', description='k-linkage tools for semicomplete digraphs')
    parser.add_argument('--report', help='write the JSON report here instead of stdout')
    commands = parser.add_subparsers(dest='command', required=True)

    generate = commands.add_parser('generate', help='write a digraph in the text format')
    generate.add_argument('kind', choices=KINDS)
    generate.add_argument('--out', required=True)
    generate.add_argument('--layout', help='layout sidecar path, default <out>.layout.json')
    generate.add_argument('--k', type=int)
    generate.add_argument('--m', type=int)
    generate.add_argument('--n', type=int)
    generate.add_argument('--seed', type=int, default=0)
    generate.add_argument('--digon-p', type=float, default=0.2)
    generate.add_argument('--variant', choices=[v.value for v in Variant], default=Variant.CONSTRUCTION.value)

    verify = commands.add_parser('verify', help='verify a counterexample against its layout')
    verify.add_argument('digraph')
    verify.add_argument('--layout', required=True)
    verify.add_argument('--budget', type=int, default=DEFAULT_BUDGET)
    verify.add_argument('--variant', choices=[v.value for v in Variant])

    kappa = commands.add_parser('kappa', help='vertex connectivity')
    kappa.add_argument('digraph')
    kappa.add_argument('--limit', type=int)

    for name, text in (('oracle', 'exact linkage search'), ('link', 'constructive linker')):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('digraph')
        sub.add_argument('--x', required=True, help='comma separated sources')
        sub.add_argument('--y', required=True, help='comma separated targets')
        sub.add_argument('--budget', type=int, default=DEFAULT_BUDGET)
        if name == 'link':
            sub.add_argument('--params', help='JSON file with LinkerParams fields')
            sub.add_argument('--out', help='write the path list here')
            sub.add_argument('--fallback-oracle', action='store_true')
    return parser


def main(argv=None):
    """
    命令行入口
    :return: 退出码 0 通过，1 失败，2 不确定或输入错误
    """
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INCONCLUSIVE if e.code else EXIT_PASS
    init_log(stream=sys.stderr)
    report = RunReport(argv)
    try:
        with timer(report.timings, 'total'):
            _COMMANDS[args.command](args, report)
    except LinkageException as e:
        logger.error('{} failed: {}'.format(args.command, e))
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_INCONCLUSIVE if isinstance(e, (ParseError, TerminalError)) else EXIT_FAIL
    except OSError as e:
        logger.error('{} failed: {}'.format(args.command, e))
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_INCONCLUSIVE
    logger.info('{} finished with {}'.format(args.command, report.overall))
    if args.report:
        write_json(report.to_dict(), args.report)
    else:
        sys.stdout.write(encode_json(report.to_dict()))
    return report.exit_code
