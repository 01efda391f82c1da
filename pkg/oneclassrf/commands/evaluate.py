# Author: oneclassrf developers
# Contributors:
# All rights reserved.

from __future__ import print_function, absolute_import

import os

from ..cmdline import argument, argument_group
from ..config import build_protocol
from ..evaluation import (NOVELTY, OUTLIER, run_protocol, write_json,
                          write_aggregate_csv, write_curves)
from ..utils import backup
from .common import ForestCommand
from .score import SCORE_KINDS

__all__ = ['EvalCommand']

protocol_group = argument_group('Protocol')
protocol_group.add_argument('--mode', choices=[NOVELTY, OUTLIER], help='''
    novelty: train on the inliers of the train split. outlier: train on the
    polluted train split, anomaly rate capped. (default: novelty)''')
protocol_group.add_argument('--score', choices=SCORE_KINDS, help='''Scoring
    function. (default: depth)''')
protocol_group.add_argument('--repeats', type=int, help='''Number of random
    train/test splits; repeat r uses seed + r. (default: 10)''')
protocol_group.add_argument('--test-fraction', type=float, help='''Held out
    fraction, stratified by label. (default: 0.5)''')
protocol_group.add_argument('--anomaly-cap', type=float, help='''Largest
    anomaly rate in outlier mode. (default: 0.1)''')
protocol_group.add_argument('--timeout-seconds', type=float, help='''Training
    budget per repeat; repeats over budget are reported NA.''')


class EvalCommand(ForestCommand):
    _concrete = True
    _group = '2-Analysis'
    name = 'eval'
    description = '''Run the repeated train/test benchmark protocol on a
    labelled dataset and write ROC-AUC and PR-AUC reports. A --data file
    named after a built-in spec (ionosphere.csv, pima.csv) uses that spec.
    Otherwise, without --spec or --label-column, the last column holds the
    labels, and a text label column with two values marks the rarer one as
    the anomaly.'''
    protocol_group = protocol_group
    out = argument('--out', type=os.path.expanduser, help='''Output JSON
        report. The aggregate CSV and the curves of the first repeat are
        written next to it. (default: <dataset>-<algo>.json)''')

    def start(self):
        settings = self.settings()
        dataset = self.load_data(infer_labels=True)
        estimator = self.estimator(settings).set_params(n_jobs=1)
        protocol = build_protocol(settings)
        print(estimator)
        print('%d repeats, %s detection, score=%s'
              % (protocol.n_repeats, protocol.mode, settings['score']))

        report = run_protocol(dataset, estimator, protocol,
                              score_kind=settings['score'],
                              n_jobs=int(settings['n_jobs']),
                              algorithm=settings['algo'])
        for repeat in report.repeats:
            if repeat.timed_out:
                print('  repeat %d (seed %d): NA (timed out)'
                      % (repeat.repeat, repeat.seed))
            else:
                print('  repeat %d (seed %d): roc_auc=%.4f pr_auc=%.4f'
                      % (repeat.repeat, repeat.seed, repeat.roc_auc,
                         repeat.pr_auc))
        agg = report.aggregates()
        if agg['roc_auc'] is None:
            print('ROC-AUC: NA  PR-AUC: NA')
        else:
            print('ROC-AUC: %.4f +/- %.4f  PR-AUC: %.4f +/- %.4f'
                  % (agg['roc_auc'], agg['roc_auc_std'], agg['pr_auc'],
                     agg['pr_auc_std']))

        out = self.out or '%s-%s.json' % (dataset.name, settings['algo'])
        stem = os.path.splitext(out)[0]
        for fn in (out, stem + '.csv', stem + '_roc.csv', stem + '_pr.csv'):
            backup(fn)
        write_json(report, out)
        write_aggregate_csv([report], stem + '.csv')
        write_curves(report, stem)
        print('Wrote %s and %s.csv' % (out, stem))
