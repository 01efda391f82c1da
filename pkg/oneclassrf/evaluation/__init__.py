"""Ranking metrics, the repeated train/test protocol and report files."""
from __future__ import absolute_import

from .metrics import roc_auc, pr_auc, roc_curve, precision_recall_curve
from .protocol import (NOVELTY, OUTLIER, Protocol, RepeatResult, EvalReport,
                       split_rows, run_protocol)
from .report import (TIMING_FIELDS, AGGREGATE_COLUMNS, report_to_json,
                     write_json, aggregate_frame, write_aggregate_csv,
                     write_curves)
