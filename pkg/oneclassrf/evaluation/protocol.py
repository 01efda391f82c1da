# Author: oneclassrf developers
# Contributors:
# All rights reserved.

#-----------------------------------------------------------------------------
# Imports
#-----------------------------------------------------------------------------

from __future__ import absolute_import, print_function, division

import logging
import time

import numpy as np
from joblib import Parallel, delayed
from sklearn import clone
from sklearn.model_selection import train_test_split

from .metrics import roc_auc, pr_auc, roc_curve, precision_recall_curve
from ..ensemble import ScoreKind
from ..exceptions import DatasetError, PreconditionError, TrainingTimeout

__all__ = ['NOVELTY', 'OUTLIER', 'Protocol', 'RepeatResult', 'EvalReport',
           'split_rows', 'run_protocol']

logger = logging.getLogger(__name__)

NOVELTY = 'novelty'
OUTLIER = 'outlier'

#-----------------------------------------------------------------------------
# Code
#-----------------------------------------------------------------------------


class Protocol(object):
    """Repeated random train/test evaluation.

    Parameters
    ----------
    mode : {'novelty', 'outlier'}
        Novelty detection trains on the inliers of the train split only;
        outlier detection trains on the whole (polluted) train split.
    test_fraction : float, default=0.5
        Fraction of the rows held out, stratified by label.
    anomaly_cap : float, default=0.1
        Outlier detection only: largest anomaly rate of the data, enforced
        before the split and again on the train split.
    n_repeats : int, default=10
    base_seed : int, default=0
        Repeat ``r`` uses seed ``base_seed + r``.
    timeout_seconds : float, optional
        Training budget per repeat; a repeat over budget is reported NA.
    """

    def __init__(self, mode=NOVELTY, test_fraction=0.5, anomaly_cap=0.1,
                 n_repeats=10, base_seed=0, timeout_seconds=None):
        if mode not in (NOVELTY, OUTLIER):
            raise PreconditionError('mode must be %r or %r, got %r'
                                    % (NOVELTY, OUTLIER, mode))
        if not 0 < test_fraction < 1:
            raise PreconditionError('test_fraction must lie in (0, 1)')
        if not 0 < anomaly_cap < 1:
            raise PreconditionError('anomaly_cap must lie in (0, 1)')
        if n_repeats < 1:
            raise PreconditionError('n_repeats must be positive')
        if timeout_seconds is not None and not timeout_seconds > 0:
            raise PreconditionError('timeout_seconds must be positive')
        self.mode = mode
        self.test_fraction = float(test_fraction)
        self.anomaly_cap = float(anomaly_cap)
        self.n_repeats = int(n_repeats)
        self.base_seed = int(base_seed)
        self.timeout_seconds = (None if timeout_seconds is None
                                else float(timeout_seconds))

    def to_dict(self):
        return {'mode': self.mode, 'test_fraction': self.test_fraction,
                'anomaly_cap': self.anomaly_cap, 'n_repeats': self.n_repeats,
                'base_seed': self.base_seed,
                'timeout_seconds': self.timeout_seconds}


class RepeatResult(object):
    """Outcome of one repeat; the AUCs are None when training timed out."""

    def __init__(self, repeat, seed, roc_auc=None, pr_auc=None,
                 train_seconds=None, test_seconds=None, n_train=0, n_test=0,
                 train_anomaly_rate=0.0, timed_out=False, curves=None):
        self.repeat = repeat
        self.seed = seed
        self.roc_auc = roc_auc
        self.pr_auc = pr_auc
        self.train_seconds = train_seconds
        self.test_seconds = test_seconds
        self.n_train = n_train
        self.n_test = n_test
        self.train_anomaly_rate = train_anomaly_rate
        self.timed_out = timed_out
        self.curves = curves

    def to_dict(self):
        return {'repeat': self.repeat, 'seed': self.seed,
                'roc_auc': self.roc_auc, 'pr_auc': self.pr_auc,
                'train_seconds': self.train_seconds,
                'test_seconds': self.test_seconds, 'n_train': self.n_train,
                'n_test': self.n_test,
                'train_anomaly_rate': self.train_anomaly_rate,
                'timed_out': self.timed_out}


def _mean_std(values):
    if any(v is None for v in values):
        return None, None
    return float(np.mean(values)), float(np.std(values))


class EvalReport(object):
    """Per-repeat results of a protocol run and their aggregates.

    Aggregates (``roc_auc``, ``pr_auc`` means, their population standard
    deviations, mean timings) are None, reported NA, as soon as one repeat
    timed out.
    """

    def __init__(self, dataset, algorithm, protocol, score_kind, repeats,
                 params=None):
        self.dataset = dataset
        self.algorithm = algorithm
        self.protocol = protocol
        self.score_kind = ScoreKind.parse(score_kind)
        self.repeats = list(repeats)
        self.params = params

    @property
    def timed_out(self):
        return any(r.timed_out for r in self.repeats)

    def aggregates(self):
        roc, roc_std = _mean_std([r.roc_auc for r in self.repeats])
        pr, pr_std = _mean_std([r.pr_auc for r in self.repeats])
        train_s, _ = _mean_std([r.train_seconds for r in self.repeats])
        test_s, _ = _mean_std([r.test_seconds for r in self.repeats])
        return {'roc_auc': roc, 'roc_auc_std': roc_std, 'pr_auc': pr,
                'pr_auc_std': pr_std, 'train_seconds': train_s,
                'test_seconds': test_s}

    @property
    def curves(self):
        """(fpr, tpr, recall, precision) of the first repeat that has them."""
        for r in self.repeats:
            if r.curves is not None:
                return r.curves
        return None

    def to_dict(self):
        return {'dataset': self.dataset, 'algorithm': self.algorithm,
                'score': self.score_kind.value,
                'protocol': self.protocol.to_dict(),
                'params': self.params,
                'repeats': [r.to_dict() for r in self.repeats],
                'aggregates': self.aggregates()}


def _cap_outliers(index, labels, cap, rng):
    # largest o with o / (n_in + o) <= cap
    outliers = index[labels[index] == 1]
    inliers = index[labels[index] == 0]
    keep = len(outliers)
    while keep > 0 and keep / (len(inliers) + keep) > cap:
        keep -= 1
    if keep < len(outliers):
        outliers = rng.choice(outliers, size=keep, replace=False)
    return np.sort(np.concatenate([inliers, outliers]))


def split_rows(labels, protocol, seed):
    """Train and test row indices of one repeat.

    Returns
    -------
    train, test : np.ndarray of int
    """
    labels = np.asarray(labels)
    index = np.arange(len(labels))
    rng = np.random.RandomState(seed % 2 ** 32)
    if protocol.mode == OUTLIER:
        index = _cap_outliers(index, labels, protocol.anomaly_cap, rng)
    if labels[index].sum() < 2:
        raise DatasetError('at least 2 outliers are needed to split the data '
                           '(after capping at %g)' % protocol.anomaly_cap)
    train, test = train_test_split(index, test_size=protocol.test_fraction,
                                   stratify=labels[index], random_state=rng)

    if protocol.mode == NOVELTY:
        train = train[labels[train] == 0]
    else:
        # the stratified split may leave the train half slightly over the
        # cap; move the excess outliers to the test half
        train_out = train[labels[train] == 1]
        n_in = len(train) - len(train_out)
        keep = len(train_out)
        while keep > 0 and keep / (n_in + keep) > protocol.anomaly_cap:
            keep -= 1
        if keep < len(train_out):
            moved = train_out[keep:]
            train = np.setdiff1d(train, moved)
            test = np.concatenate([test, moved])
    return np.sort(train), np.sort(test)


def _run_repeat(dataset, estimator, protocol, kind, repeat, keep_curves):
    seed = protocol.base_seed + repeat
    X, y = dataset.features, dataset.labels
    train, test = split_rows(y, protocol, seed)
    model = clone(estimator).set_params(random_state=seed)
    result = RepeatResult(repeat, seed, n_train=len(train), n_test=len(test),
                          train_anomaly_rate=float(y[train].mean()))

    deadline = None
    if protocol.timeout_seconds is not None:
        deadline = time.time() + protocol.timeout_seconds
    start = time.time()
    try:
        model.fit(X[train], deadline=deadline)
    except TrainingTimeout:
        logger.warning('repeat %d timed out after %.1f s', repeat,
                       time.time() - start)
        result.timed_out = True
        return result
    result.train_seconds = time.time() - start

    start = time.time()
    scores = model.decision_function(X[test], kind=kind)
    result.test_seconds = time.time() - start

    result.roc_auc = roc_auc(scores, y[test])
    result.pr_auc = pr_auc(scores, y[test])
    if keep_curves:
        fpr, tpr = roc_curve(scores, y[test])
        recall, precision = precision_recall_curve(scores, y[test])
        result.curves = (fpr, tpr, recall, precision)
    logger.info('repeat %d (seed %d): roc_auc=%.4f pr_auc=%.4f', repeat, seed,
                result.roc_auc, result.pr_auc)
    return result


def run_protocol(dataset, estimator, protocol=None, score_kind='depth',
                 n_jobs=1, curve_repeat=0, algorithm=None):
    """Evaluate an estimator on a labelled dataset.

    Parameters
    ----------
    dataset : Dataset
        Must have labels with at least two outliers.
    estimator : OneClassRF or IsolationForest
        Cloned and reseeded with ``base_seed + r`` for repeat ``r``.
    protocol : Protocol, optional
    score_kind : ScoreKind or str, default='depth'
        Turned into an abnormality before computing the AUCs.
    n_jobs : int, default=1
        Repeats run in parallel with joblib.
    curve_repeat : int, default=0
        Repeat whose ROC and PR curves are kept.
    algorithm : str, optional
        Name used in the report; defaults to the estimator class name.

    Returns
    -------
    report : EvalReport
    """
    if protocol is None:
        protocol = Protocol()
    if dataset.labels is None:
        raise DatasetError('evaluation needs a labelled dataset')
    if dataset.n_outliers == 0:
        raise DatasetError('dataset %r has no outliers' % dataset.name)
    kind = ScoreKind.parse(score_kind)

    repeats = Parallel(n_jobs=n_jobs)(
        delayed(_run_repeat)(dataset, estimator, protocol, kind, r,
                             r == curve_repeat)
        for r in range(protocol.n_repeats))
    if algorithm is None:
        algorithm = estimator.__class__.__name__
    params = dict((k, v) for k, v in estimator.get_params().items()
                  if k not in ('random_state', 'n_jobs'))
    return EvalReport(dataset.name, algorithm, protocol, kind, repeats,
                      params)
