# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Report files written by ``ocrf eval``.

JSON report (one per run)::

    {"dataset": str, "algorithm": str, "score": str,
     "protocol": {"mode", "test_fraction", "anomaly_cap", "n_repeats",
                  "base_seed", "timeout_seconds"},
     "params": {...estimator hyperparameters...},
     "repeats": [{"repeat", "seed", "roc_auc", "pr_auc", "train_seconds",
                  "test_seconds", "n_train", "n_test",
                  "train_anomaly_rate", "timed_out"}, ...],
     "aggregates": {"roc_auc", "roc_auc_std", "pr_auc", "pr_auc_std",
                    "train_seconds", "test_seconds"}}

Missing values (timed out runs) are ``null`` in JSON and ``NA`` in CSV.
"""

from __future__ import absolute_import, print_function, division

import json

import pandas as pd

__all__ = ['TIMING_FIELDS', 'AGGREGATE_COLUMNS', 'report_to_json',
           'write_json', 'aggregate_frame', 'write_aggregate_csv',
           'write_curves']

TIMING_FIELDS = ('train_seconds', 'test_seconds')
AGGREGATE_COLUMNS = ['dataset', 'algorithm', 'roc_auc', 'pr_auc',
                     'roc_auc_std', 'pr_auc_std', 'train_seconds',
                     'test_seconds']
_FLOAT_FORMAT = '%.9g'


def report_to_json(report):
    return json.dumps(report.to_dict(), indent=2, sort_keys=True)


def write_json(report, fn):
    with open(fn, 'w') as f:
        f.write(report_to_json(report))
        f.write('\n')


def aggregate_frame(reports):
    """One row per report, in the column layout of a benchmark table."""
    rows = []
    for report in reports:
        row = {'dataset': report.dataset, 'algorithm': report.algorithm}
        row.update(report.aggregates())
        rows.append(row)
    return pd.DataFrame(rows, columns=AGGREGATE_COLUMNS)


def write_aggregate_csv(reports, fn):
    aggregate_frame(reports).to_csv(fn, index=False, na_rep='NA',
                                    float_format=_FLOAT_FORMAT)


def write_curves(report, prefix):
    """Write ``<prefix>_roc.csv`` (fpr,tpr) and ``<prefix>_pr.csv``
    (recall,precision). Returns the two file names, or None when no repeat
    kept its curves."""
    curves = report.curves
    if curves is None:
        return None
    fpr, tpr, recall, precision = curves
    roc_fn, pr_fn = prefix + '_roc.csv', prefix + '_pr.csv'
    pd.DataFrame({'fpr': fpr, 'tpr': tpr}, columns=['fpr', 'tpr']).to_csv(
        roc_fn, index=False, float_format=_FLOAT_FORMAT)
    pd.DataFrame({'recall': recall, 'precision': precision},
                 columns=['recall', 'precision']).to_csv(
        pr_fn, index=False, float_format=_FLOAT_FORMAT)
    return roc_fn, pr_fn
