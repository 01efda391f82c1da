# Author: oneclassrf developers
# Contributors:
# All rights reserved.

"""Ranking metrics. Scores are abnormalities: higher means label 1."""

from __future__ import absolute_import, print_function, division

import numpy as np
from scipy.stats import rankdata

from ..exceptions import PreconditionError
from ..utils import check_binary_labels

__all__ = ['roc_auc', 'pr_auc', 'roc_curve', 'precision_recall_curve']


def _check(scores, labels):
    scores = np.asarray(scores, dtype=np.float64).reshape(-1)
    labels = check_binary_labels(labels, len(scores))
    if np.any(np.isnan(scores)):
        raise PreconditionError('scores contain NaN')
    n_pos = int(labels.sum())
    if n_pos == 0 or n_pos == len(labels):
        raise PreconditionError('need at least one label of each class')
    return scores, labels


def _threshold_counts(scores, labels):
    """Cumulative (true, false) positives at each distinct score, from the
    highest score down. Tied scores form a single block."""
    order = np.argsort(-scores, kind='mergesort')
    scores, labels = scores[order], labels[order]
    block_ends = np.r_[np.nonzero(np.diff(scores))[0], len(scores) - 1]
    tps = np.cumsum(labels)[block_ends]
    fps = block_ends + 1 - tps
    return tps, fps


def roc_auc(scores, labels):
    """Area under the ROC curve as the Mann-Whitney statistic.

    ``P(score_outlier > score_inlier) + P(equal) / 2``, computed from the
    rank sum of the outliers with average ranks for ties.
    """
    scores, labels = _check(scores, labels)
    n_pos = labels.sum()
    n_neg = len(labels) - n_pos
    ranks = rankdata(scores)
    u = ranks[labels == 1].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


def pr_auc(scores, labels):
    """Average precision ``sum_k (R_k - R_{k-1}) P_k`` over descending
    distinct scores."""
    scores, labels = _check(scores, labels)
    tps, fps = _threshold_counts(scores, labels)
    precision = tps / (tps + fps)
    recall = tps / tps[-1]
    return float(np.sum(np.diff(np.r_[0.0, recall]) * precision))


def roc_curve(scores, labels):
    """(fpr, tpr) at every distinct threshold, starting from (0, 0)."""
    scores, labels = _check(scores, labels)
    tps, fps = _threshold_counts(scores, labels)
    fpr = np.r_[0.0, fps / fps[-1]]
    tpr = np.r_[0.0, tps / tps[-1]]
    return fpr, tpr


def precision_recall_curve(scores, labels):
    """(recall, precision) at every distinct threshold, by decreasing
    threshold."""
    scores, labels = _check(scores, labels)
    tps, fps = _threshold_counts(scores, labels)
    return tps / tps[-1], tps / (tps + fps)
